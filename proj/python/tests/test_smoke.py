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

import json
import math
from pathlib import Path

import pytest

import dessins

DATA = Path(__file__).resolve().parents[2] / "data"


def load(name):
    return json.loads((DATA / name).read_text())


def test_pauli():
    assert dessins.pauli_multiply("X", "Z") == "-iY"
    assert dessins.pauli_multiply("XZ", "ZX") == "YY"
    assert dessins.pauli_commutes("XX", "ZZ")
    assert not dessins.pauli_commutes("XI", "ZI")
    with pytest.raises(ValueError):
        dessins.pauli_multiply("XQ", "X")


def test_chsh_and_squares():
    assert math.isclose(dessins.chsh_norm(["IX", "XI", "IZ", "ZI"]), 2 * math.sqrt(2))
    assert dessins.census_squares(2) == 90


def test_mermin():
    cert = dessins.verify_magic(dessins.catalog_get("mermin_square"))
    assert cert["magic"] and cert["negative_lines"] == 1
    report = dessins.analyze_dessin(load("mermin_dessin.json"))
    assert report["genus"] == 1
    assert report["passport"] == "[6^1 3^1, 2^4 1^1, 6^1 3^1]"
    assert report["group"]["order"] == 36
    assert sorted(c["fingerprint"]["order"] for c in report["stabilizer_classes"]) == [1, 2]


def test_groups():
    assert dessins.coset_index("gens: a, b; rels: a^2, b^3, (a*b)^5", 1000) == 60
    classes = dessins.low_index("gens: r0, r1; rels: r1^2", 3)
    assert [c["index"] for c in classes].count(3) == 3
    with pytest.raises(dessins.CapExceeded):
        dessins.coset_index("gens: a, b; rels: a^2, b^3", 100)


def test_geometry():
    petersen = dessins.identify(dessins.catalog_get("petersen"))
    assert petersen["automorphisms"] == "120"
    assert petersen["independence_number"] == 4
    assert petersen["edge_chromatic_number"] == 4
    hexagon = dessins.polygon(load("gh22.json"), 6)
    assert hexagon["pass"] and (hexagon["s"], hexagon["t"]) == (2, 2)
    kinds = [h["kind"] for h in dessins.hyperplanes(dessins.catalog_get("gq22"))]
    assert (kinds.count("ovoid"), kinds.count("perp"), kinds.count("grid")) == (6, 15, 10)


def test_belyi():
    report = dessins.belyi_verify(load("belyi_b1.json"), load("dessin_b1.json"))
    assert report["critical_values_ok"] and report["matches_dessin"]
    bad = dessins.belyi_verify({"num": [[0, 0], [1, 0], [1, 0]], "den": [[1, 0]]})
    assert not bad["critical_values_ok"]
