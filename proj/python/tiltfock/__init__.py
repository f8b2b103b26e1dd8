# Copyright 2026 The tiltfock Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Canonical bases of the q-Fock space and tilting patterns."""

import json

from . import _core
from ._core import PathError, canonical_element, check_main, check_theorem1, laurent_bar, laurent_mul, q_int

__all__ = [
    "PathError",
    "canonical_element",
    "check_main",
    "check_theorem1",
    "decomposition_matrix",
    "laurent_bar",
    "laurent_mul",
    "pattern",
    "q_int",
]


def decomposition_matrix(l, n):
    """Decomposition matrix as a dict with keys l, n, rows, cols, entries."""
    return json.loads(_core.decomposition_matrix_json(l, n))


def pattern(weight, l, route="singular"):
    """Tilting pattern of a dominant weight as a dict."""
    return json.loads(_core.pattern_json(list(weight), l, route))
