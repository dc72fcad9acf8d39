// Copyright 2026 The dessins Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dessins/dessin.hpp"
#include "dessins/error.hpp"

using namespace dessins;

namespace {

Dessin mermin_dessin() {
    return Dessin::make(Permutation::from_cycles(9, {{1, 2, 4, 8, 7, 3}, {5, 9, 6}}),
                        Permutation::from_cycles(9, {{2, 5}, {3, 6}, {4, 7}, {8, 9}}));
}

Dessin b1() {
    return Dessin::make(Permutation::from_cycles(4, {{2, 3}}), Permutation::from_cycles(4, {{1, 2}, {3, 4}}));
}

Permutation random_permutation(std::size_t n, std::mt19937 &rng) {
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0u);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(images);
}

}  // namespace

TEST_CASE("Mermin dessin invariants") {
    auto d = mermin_dessin();
    CHECK(passport(d).to_string() == "[6^1 3^1, 2^4 1^1, 6^1 3^1]");
    CHECK(signature(d) == Signature{2, 5, 2, 1});
    auto group = monodromy_group(d);
    CHECK(group.order == 36);
    CHECK_FALSE(group.abelian);
    CHECK(group.name == std::optional<std::string>("Z3^2:Z2^2"));
    CHECK((d.alpha() * d.beta() * d.gamma()).is_identity());
    CHECK(d.is_clean());
}

TEST_CASE("dessin b1 of the square") {
    auto d = b1();
    CHECK(passport(d).to_string() == "[2^1 1^2, 2^2, 4^1]");
    CHECK(signature(d) == Signature{3, 2, 1, 0});
    auto group = monodromy_group(d);
    CHECK(group.order == 8);
    CHECK(group.name == std::optional<std::string>("D4"));
}

TEST_CASE("a single edge") {
    auto d = Dessin::make(Permutation::identity(1), Permutation::identity(1));
    CHECK(signature(d) == Signature{1, 1, 1, 0});
    CHECK(monodromy_group(d).order == 1);
}

TEST_CASE("disconnected pairs are rejected with their orbits") {
    try {
        Dessin::make(Permutation::from_cycles(4, {{1, 2}}), Permutation::from_cycles(4, {{3, 4}}));
        FAIL("expected InputError");
    } catch (const InputError &e) {
        CHECK(std::string(e.what()).find("{1,2}{3,4}") != std::string::npos);
    }
    CHECK_THROWS_AS(Dessin::make(Permutation::identity(2), Permutation::identity(3)), InputError);
}

TEST_CASE("passport text round-trips and fixes the genus") {
    auto p = passport(mermin_dessin());
    CHECK(Passport::parse(p.to_string()) == p);
    CHECK(genus_from_passport(p, 9) == 1);
    CHECK_THROWS_AS(genus_from_passport(p, 10), InputError);
    // 2 - 2g must be even and at most 2
    CHECK_THROWS_AS(genus_from_passport(Passport::parse("[1^2, 1^2, 1^2]"), 2), InputError);
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(7);
    for (const auto &d : {mermin_dessin(), b1()}) {
        auto reference = canonical_form(d);
        for (int trial = 0; trial < 50; ++trial) {
            auto c = random_permutation(d.n_edges(), rng);
            auto moved = Dessin::make(d.alpha().conjugate_by(c), d.beta().conjugate_by(c));
            CHECK(canonical_form(moved) == reference);
        }
        CHECK(canonical_form(canonical_dessin(d)) == reference);
    }
}

TEST_CASE("canonical form separates non-conjugate pairs") {
    auto a = Dessin::make(Permutation::from_cycles(3, {{1, 2, 3}}), Permutation::from_cycles(3, {{1, 2}}));
    auto b = Dessin::make(Permutation::from_cycles(3, {{1, 2}}), Permutation::from_cycles(3, {{2, 3}}));
    CHECK(canonical_form(a) != canonical_form(b));
    // the mirror image (alpha inverted) is conjugate to `a` by (1,2)
    auto mirror = Dessin::make(a.alpha().inverse(), a.beta());
    CHECK(canonical_form(mirror) == canonical_form(a));
}

TEST_CASE("DOT output names every edge") {
    auto dot = to_dot(b1());
    CHECK(dot.find("graph") != std::string::npos);
    for (int e = 1; e <= 4; ++e) {
        CHECK(dot.find("label=\"" + std::to_string(e) + "\"") != std::string::npos);
    }
}
