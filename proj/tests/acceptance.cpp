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

// One PASS/FAIL line per acceptance criterion.  Exit status is nonzero if
// any criterion fails.

#include "tiltfock/bridge.hpp"
#include "tiltfock/fock.hpp"
#include "tiltfock/singular.hpp"
#include "tiltfock/soergel.hpp"

#include "oracle.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

using namespace tiltfock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome from_report(const Report& r) {
  Outcome o{r.ok(), std::to_string(r.passed) + "/" + std::to_string(r.checked)};
  if (!r.failures.empty()) o.detail += ", first failure: " + r.failures.front().input;
  return o;
}

// Runs a shell command, returning its exit status and stdout.
std::pair<int, std::string> shell(const std::string& cmd) {
  std::string out;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, out};
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome defining_conditions() {
  Report r;
  for (int l = 2; l <= 3; ++l)
    for (int n = 0; n <= 6; ++n) {
      const WBasis basis(l, n);
      for (const auto& g : canonical_basis(l, n)) {
        bool good = bar_involution(g.expansion, basis) == g.expansion && g.expansion.coeff(g.label) == LaurentPoly(1);
        for (const auto& [mu, c] : g.expansion.terms())
          if (mu != g.label && !c.in_q_zq()) good = false;
        r.record(good, {"l=" + std::to_string(l) + " G" + g.label.to_string(), g.expansion.to_string(), ""});
      }
    }
  return from_report(r);
}

Outcome oracle_uniqueness() {
  Report r;
  for (int l = 2; l <= 3; ++l)
    for (int n = 0; n <= 4; ++n)
      for (const Partition& p : enumerate_partitions(n, true, l)) {
        const auto found = oracle::search(p, l, 3, 3);
        r.record(found.size() == 1 && found.front() == canonical_element(p, l),
                 {"l=" + std::to_string(l) + " " + p.to_string(), std::to_string(found.size()) + " solutions", ""});
      }
  return from_report(r);
}

Outcome matrix_shape() {
  Report r;
  for (int l = 2; l <= 3; ++l)
    for (int n = 0; n <= 8; ++n) {
      const DecompositionMatrix m = decomposition_matrix(l, n);
      for (std::size_t i = 0; i < m.rows.size(); ++i)
        for (std::size_t j = 0; j < m.cols.size(); ++j) {
          const LaurentPoly& e = m.entries[i][j];
          const bool good = m.rows[i] == m.cols[j]
                                ? e == LaurentPoly(1)
                                : e.is_zero() || (e.in_q_zq() && dominance_leq(m.cols[j], m.rows[i]));
          r.record(good, {"l=" + std::to_string(l) + " d" + m.rows[i].to_string() + m.cols[j].to_string(),
                          e.to_string(), ""});
        }
    }
  return from_report(r);
}

Outcome single_steps() {
  Report r;
  for (int l = 2; l <= 3; ++l)
    for (int n = 0; n <= 6; ++n)
      for (const Partition& p : enumerate_partitions(n))
        for (int i = 0; i < l; ++i) r.merge(check_theorem1(p, i, l));
  return from_report(r);
}

Outcome divided_steps() {
  Report r;
  for (int l = 2; l <= 3; ++l)
    for (int n = 0; n <= 5; ++n)
      for (const Partition& p : enumerate_partitions(n))
        for (int i = 0; i < l; ++i)
          for (int k = 1; k <= 3; ++k) r.merge(check_theorem2(p, i, k, l));
  r.merge(check_theorem2(Partition({9, 6, 3}), 1, 2, 4));
  return from_report(r);
}

Outcome path_independence() {
  Report r;
  for (int l = 2; l <= 3; ++l)
    for (int n = 0; n <= 6; ++n)
      for (const Partition& p : enumerate_partitions(n))
        r.merge(check_path_independence(p, l, 20, 1 + 7919ULL * n));
  return from_report(r);
}

Outcome regular_agreement() {
  Report r;
  for (int m = 2; m <= 4; ++m)
    for (int l = m; l <= m + 1; ++l) {
      const RegularBlock b(Weight(std::vector<Coord>(m, 0), l));
      for (const Weight& a : dominant_alcoves(b, 40)) {
        const Pattern reg = regular_pattern(a);
        const Pattern sing = compute_pattern(a);
        r.record(reg == sing, {"l=" + std::to_string(l) + " " + a.to_string(), reg.to_string(), sing.to_string()});
      }
    }
  return from_report(r);
}

Outcome sum_identity() {
  Report r;
  for (int m = 2; m <= 4; ++m)
    for (int l = 2; l <= 3; ++l)
      for (int n = 0; n <= 7; ++n)
        for (const Partition& p : enumerate_partitions(n)) {
          if (p.length() >= m) continue;
          const Weight w = weight_of(p, m, l);
          if (!Orbit(w).is_regular()) r.merge(check_corollary1(w));
        }
  return from_report(r);
}

Outcome crosscheck() {
  Outcome o;
  for (const char* l : {"2", "3"}) {
    const auto [code, out] = shell(std::string(TILTFOCK_CLI_PATH) + " --no-cache crosscheck --l " + l + " --n-max 6");
    o.detail += std::string(o.detail.empty() ? "" : ", ") + "l=" + l + " exit " + std::to_string(code);
    if (code != 0) o.ok = false;
  }
  return o;
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / ("tiltfock-acceptance-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  ::setenv("TILTFOCK_CACHE_DIR", dir.c_str(), 1);
  const std::string cli = TILTFOCK_CLI_PATH;
  const std::vector<std::string> commands{
      "canon --l 2 --n 6 --format json --expand",
      "canon --l 3 --n 6 --format table",
      "canon --l 3 --n 5 --format latex",
      "pattern --l 3 --weight [8,4,0] --format json --at-one",
      "pattern --l 2 --weight [4,2,2,0] --format table",
      "pattern --l 2 --partition [3,1,1] --route singular",
      "crosscheck --l 2 --n-max 4 --format json --jobs 3",
      "crosscheck --l 3 --n-max 4 --perturb",
  };
  Outcome o;
  int compared = 0;
  for (const std::string& c : commands) {
    const auto a = shell(cli + " --no-cache " + c);
    const auto b = shell(cli + " --no-cache " + c);
    const auto cold = shell(cli + " " + c);
    const auto warm = shell(cli + " " + c);
    const bool same = a == b && a == cold && a == warm && !a.second.empty();
    if (!same) {
      o.ok = false;
      o.detail += "differs: " + c + "; ";
    }
    ++compared;
  }
  std::filesystem::remove_all(dir);
  o.detail = std::to_string(compared) + " commands x 4 runs" + (o.ok ? "" : ", " + o.detail);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"canonical basis defining conditions, l in {2,3}, n <= 6", defining_conditions},
      {"brute-force uniqueness oracle, l in {2,3}, n <= 4", oracle_uniqueness},
      {"decomposition matrix shape, l in {2,3}, n <= 8", matrix_shape},
      {"f_i against one translation, |lambda| <= 6", single_steps},
      {"divided powers against translations, |lambda| <= 5, n <= 3", divided_steps},
      {"path independence, 20 paths per target, n <= 6", path_independence},
      {"regular and singular patterns agree, <= 40 steps", regular_agreement},
      {"sum identity at q = 1, m <= 4", sum_identity},
      {"crosscheck exits 0 for l in {2,3}, n <= 6", crosscheck},
      {"byte-identical repeated runs", determinism},
  };
  bool all = true;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (o.ok ? "PASS" : "FAIL") << " [" << index << "] " << name << " (" << o.detail << ", " << secs << " s)";
    std::cout << line.str() << std::endl;
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
