# Copyright 2026 The dessins Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Dessins d'enfants, Pauli contextuality and finite geometries.

Inputs and outputs use the same JSON shapes as the ``dessins`` CLI.
"""

import json

from . import _core
from ._core import CapExceeded, catalog_names, census_squares, chsh_norm, coset_index, pauli_commutes, pauli_multiply

__all__ = [
    "CapExceeded",
    "analyze_dessin",
    "belyi_verify",
    "catalog_get",
    "catalog_names",
    "census_pentagrams",
    "census_squares",
    "chsh_norm",
    "coset_index",
    "hyperplanes",
    "identify",
    "low_index",
    "pauli_commutes",
    "pauli_multiply",
    "polygon",
    "verify_magic",
]


def _call(fn, *args):
    return json.loads(fn(*args))


def analyze_dessin(dessin):
    """Passport, signature, genus, monodromy group and stabilizer classes.

    ``dessin`` is ``{"edges": n, "alpha": cycles, "beta": cycles}`` with
    1-based cycles.
    """
    return _call(_core.analyze_dessin, json.dumps(dessin))


def verify_magic(config):
    return _call(_core.verify_magic, json.dumps(config))


def census_pentagrams(threads=0):
    return _call(_core.census_pentagrams, threads)


def low_index(presentation, max_index):
    """Conjugacy classes of subgroups of index <= max_index, one coset table each."""
    return _call(_core.low_index, presentation, max_index)


def identify(graph):
    """Graph or point-line geometry: |Aut|, catalog matches and basic invariants."""
    return _call(_core.identify, json.dumps(graph))


def polygon(geometry, n):
    return _call(_core.polygon, json.dumps(geometry), n)


def hyperplanes(geometry):
    return _call(_core.hyperplanes, json.dumps(geometry))


def catalog_get(name):
    return _call(_core.catalog_get, name)


def belyi_verify(candidate, dessin=None):
    return _call(_core.belyi_verify, json.dumps(candidate), "" if dessin is None else json.dumps(dessin))
