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

#include "tiltfock/bridge.hpp"
#include "tiltfock/serialize.hpp"
#include "tiltfock/soergel.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tiltfock;

namespace {

Weight to_weight(const std::vector<Coord>& coords, int l) {
  if (coords.size() < 2) throw py::value_error("a weight needs at least two coordinates");
  return Weight(coords, l);
}

std::string pattern_json(const std::vector<Coord>& coords, int l, const std::string& route) {
  const Weight w = to_weight(coords, l);
  if (!is_dominant(w)) throw py::value_error(w.to_string() + " is not dominant");
  if (route == "regular") {
    if (!Orbit(w).is_regular()) throw py::value_error(w.to_string() + " is not regular");
    BlockPattern p;
    static_cast<Pattern&>(p) = regular_pattern(w);
    p.block = Orbit(w);
    return to_json(p).dump();
  }
  if (route != "singular") throw py::value_error("route must be 'regular' or 'singular'");
  return to_json(compute_pattern(w)).dump();
}

py::tuple report_tuple(const Report& r) { return py::make_tuple(r.checked, r.passed); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Canonical bases of the q-Fock space and tilting patterns";

  m.def("laurent_mul", [](const std::string& a, const std::string& b) {
    return (LaurentPoly::parse(a) * LaurentPoly::parse(b)).to_string();
  });
  m.def("laurent_bar", [](const std::string& a) { return LaurentPoly::parse(a).bar().to_string(); });
  m.def("q_int", [](int n) { return q_int(n).to_string(); });

  m.def(
      "canonical_element",
      [](const std::vector<int>& parts, int l) {
        py::dict out;
        const FockVector& g = canonical_element(Partition(parts), l);
        for (const auto& [mu, c] : g.terms()) out[py::tuple(py::cast(mu.parts()))] = c.to_string();
        return out;
      },
      py::arg("partition"), py::arg("l"));

  m.def(
      "decomposition_matrix_json",
      [](int l, int n) {
        if (l < 2) throw py::value_error("l must be at least 2");
        if (n < 0) throw py::value_error("n must be non-negative");
        py::gil_scoped_release release;
        return to_json(decomposition_matrix(l, n)).dump();
      },
      py::arg("l"), py::arg("n"));

  m.def("pattern_json", &pattern_json, py::arg("weight"), py::arg("l"), py::arg("route") = "singular");

  m.def(
      "check_main", [](int l, int n) { return report_tuple(check_main(l, n)); }, py::arg("l"), py::arg("n"));
  m.def(
      "check_theorem1",
      [](const std::vector<int>& parts, int i, int l) { return report_tuple(check_theorem1(Partition(parts), i, l)); },
      py::arg("partition"), py::arg("i"), py::arg("l"));

  py::register_exception<PathError>(m, "PathError");
}
