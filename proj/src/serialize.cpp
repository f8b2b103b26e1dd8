// Copyright 2026 The tiltfock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tiltfock/serialize.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace tiltfock {

namespace {

Json integer_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

Json coords_json(const Weight& w) {
  Json a = Json::array();
  for (Coord c : w.coords()) a.push_back(c);
  return a;
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::string grid(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) line += (c ? "  " : "") + pad(row[c], width[c]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::string partition_latex(const Partition& p) {
  if (p.empty()) return "\\emptyset";
  std::ostringstream os;
  os << "(";
  for (int r = 1; r <= p.length(); ++r) os << (r > 1 ? "," : "") << p.row(r);
  os << ")";
  return os.str();
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json a = Json::array();
  const auto& t = p.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) a.push_back(Json::array({it->first, integer_json(it->second)}));
  return a;
}

LaurentPoly laurent_from_json(const Json& j) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    const Json& c = t.at(1);
    terms.emplace_back(t.at(0).get<int>(), c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<std::int64_t>()));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Weight& w) {
  Json j;
  j["m"] = w.rank();
  j["l"] = w.level();
  j["coords"] = coords_json(w);
  return j;
}

Json to_json(const Orbit& o) {
  Json j;
  j["m"] = o.rank();
  j["l"] = o.level();
  j["representative"] = coords_json(o.fundamental());
  j["class_sizes"] = o.class_sizes();
  j["stabilizer_order"] = integer_json(o.stabilizer_order());
  return j;
}

Json to_json(const Pattern& p) {
  Json j;
  j["m"] = p.top.rank();
  j["l"] = p.top.level();
  j["top"] = coords_json(p.top);
  Json terms = Json::array();
  for (const Weight& w : p.support_descending()) {
    Json t;
    t["weight"] = coords_json(w);
    t["coeff"] = to_json(p.terms.at(w));
    t["top"] = w == p.top;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const BlockPattern& p) {
  Json j;
  j["block"] = to_json(p.block);
  const Json body = to_json(static_cast<const Pattern&>(p));
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

Json to_json(const DecompositionMatrix& d) {
  Json j;
  j["l"] = d.l;
  j["n"] = d.n;
  Json rows = Json::array();
  for (const auto& p : d.rows) rows.push_back(to_json(p));
  Json cols = Json::array();
  for (const auto& p : d.cols) cols.push_back(to_json(p));
  j["rows"] = std::move(rows);
  j["cols"] = std::move(cols);
  Json entries = Json::array();
  for (std::size_t r = 0; r < d.rows.size(); ++r)
    for (std::size_t c = 0; c < d.cols.size(); ++c)
      if (!d.entries[r][c].is_zero()) entries.push_back(Json::array({r, c, to_json(d.entries[r][c])}));
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const Report& r) {
  Json j;
  j["checked"] = r.checked;
  j["passed"] = r.passed;
  Json f = Json::array();
  for (const auto& x : r.failures) f.push_back({{"input", x.input}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  j["failures"] = std::move(f);
  return j;
}

std::string laurent_latex(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& t = p.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    Integer c = it->second;
    const int e = it->first;
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << "q";
    if (e != 1) os << "^{" << e << "}";
  }
  return os.str();
}

std::string render_latex(const DecompositionMatrix& d) {
  std::ostringstream os;
  os << "% l = " << d.l << ", n = " << d.n << "\n";
  os << "\\begin{tabular}{l|" << std::string(d.cols.size(), 'c') << "}\n";
  os << " ";
  for (const auto& c : d.cols) os << " & $" << partition_latex(c) << "$";
  os << " \\\\\n\\hline\n";
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    os << "$" << partition_latex(d.rows[r]) << "$";
    for (std::size_t c = 0; c < d.cols.size(); ++c) {
      os << " & ";
      if (!d.entries[r][c].is_zero()) os << "$" << laurent_latex(d.entries[r][c]) << "$";
    }
    os << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

std::string render_table(const DecompositionMatrix& d) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{""};
  for (const auto& c : d.cols) head.push_back(c.to_string());
  cells.push_back(std::move(head));
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    std::vector<std::string> row{d.rows[r].to_string()};
    for (std::size_t c = 0; c < d.cols.size(); ++c)
      row.push_back(d.entries[r][c].is_zero() ? "." : d.entries[r][c].to_string());
    cells.push_back(std::move(row));
  }
  std::ostringstream os;
  os << "l = " << d.l << ", n = " << d.n << "\n" << grid(cells);
  return os.str();
}

std::string render_latex(const Pattern& p, bool with_values_at_one) {
  std::ostringstream os;
  os << "% top " << p.top.to_string() << ", m = " << p.top.rank() << ", l = " << p.top.level() << "\n";
  os << "\\begin{tabular}{l|c" << (with_values_at_one ? "|c" : "") << "}\n";
  os << "weight & $P(q)$" << (with_values_at_one ? " & $P(1)$" : "") << " \\\\\n\\hline\n";
  for (const Weight& w : p.support_descending()) {
    os << "$" << w.to_string() << "$ & $" << laurent_latex(p.terms.at(w)) << "$";
    if (with_values_at_one) os << " & " << p.terms.at(w).at_one();
    os << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

std::string render_table(const Pattern& p, bool with_values_at_one) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"weight", "P(q)"});
  if (with_values_at_one) cells.back().push_back("P(1)");
  for (const Weight& w : p.support_descending()) {
    std::vector<std::string> row{w.to_string() + (w == p.top ? " *" : ""), p.terms.at(w).to_string()};
    if (with_values_at_one) row.push_back(p.terms.at(w).at_one().str());
    cells.push_back(std::move(row));
  }
  std::ostringstream os;
  os << "top " << p.top.to_string() << ", m = " << p.top.rank() << ", l = " << p.top.level() << "\n" << grid(cells);
  return os.str();
}

std::string render_expansions(int l, int n) {
  std::ostringstream os;
  const auto basis = canonical_basis(l, n);
  for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
    os << "G(" << it->label.to_string() << ") = ";
    bool first = true;
    const auto& t = it->expansion.terms();
    for (auto jt = t.rbegin(); jt != t.rend(); ++jt) {
      os << (first ? "" : " + ");
      first = false;
      const LaurentPoly& c = jt->second;
      if (c != LaurentPoly(1)) {
        if (c.terms().size() == 1 && c.terms().front().second == 1) {
          os << c.to_string();
        } else {
          os << "(" << c.to_string() << ")";
        }
      }
      os << "|" << jt->first.to_string() << ">";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace tiltfock
