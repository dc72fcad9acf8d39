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

#include "dessins/error.hpp"
#include "dessins/group.hpp"
#include "dessins/permutation.hpp"

using namespace dessins;

TEST_CASE("cycle notation") {
    auto p = Permutation::from_cycles(9, {{1, 2, 4, 8, 7, 3}, {5, 9, 6}});
    CHECK(p.to_cycle_string() == "(1,2,4,8,7,3)(5,9,6)");
    CHECK(format_cycle_type(p.cycle_type()) == "6^1 3^1");
    CHECK(p.order() == 6);
    CHECK(Permutation::identity(3).to_cycle_string() == "()");
    CHECK(parse_cycle_type("2^4 1^1") == CycleType{{2, 4}, {1, 1}});
    CHECK(parse_cycle_type("2^4.1^1") == CycleType{{2, 4}, {1, 1}});
    CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), InputError);
    CHECK_THROWS_AS(Permutation({0, 0, 1}), InputError);
}

TEST_CASE("products compose left to right") {
    auto a = Permutation::from_cycles(3, {{1, 2}});
    auto b = Permutation::from_cycles(3, {{2, 3}});
    auto ab = a * b;
    // 0 -> 1 under a, then 1 -> 2 under b
    CHECK(ab(0) == 2);
    CHECK((ab * ab.inverse()).is_identity());
    CHECK(a.conjugate_by(b) == Permutation::from_cycles(3, {{1, 3}}));
}

TEST_CASE("A5 closure matches a brute-force count in S5") {
    PermutationGroup g({Permutation::from_cycles(5, {{1, 2, 3, 4, 5}}), Permutation::from_cycles(5, {{1, 2, 3}})});
    CHECK(g.order() == 60);

    // oracle: even permutations of five points, by element order
    std::vector<std::uint32_t> images(5);
    std::iota(images.begin(), images.end(), 0u);
    std::map<std::uint64_t, std::uint64_t> expected;
    do {
        Permutation p(images);
        std::size_t transpositions = 0;
        for (const auto &c : p.cycles(false)) {
            transpositions += c.size() - 1;
        }
        if (transpositions % 2 == 0) {
            ++expected[p.order()];
        }
    } while (std::next_permutation(images.begin(), images.end()));
    CHECK(g.fingerprint().element_orders == expected);
    CHECK(identify_group(g.fingerprint(), g.is_abelian()) == std::optional<std::string>("A5"));
}

TEST_CASE("group names") {
    PermutationGroup cyclic({Permutation::from_cycles(6, {{1, 2, 3, 4, 5, 6}})});
    CHECK(identify_group(cyclic.fingerprint(), cyclic.is_abelian()) == std::optional<std::string>("Z6"));
    PermutationGroup d4({Permutation::from_cycles(4, {{2, 3}}), Permutation::from_cycles(4, {{1, 2}, {3, 4}})});
    CHECK(d4.order() == 8);
    CHECK(identify_group(d4.fingerprint(), d4.is_abelian()) == std::optional<std::string>("D4"));
    PermutationGroup s4({Permutation::from_cycles(4, {{1, 2, 3, 4}}), Permutation::from_cycles(4, {{1, 2}})});
    CHECK(s4.order() == 24);
    CHECK(identify_group(s4.fingerprint(), false) == std::optional<std::string>("S4"));
}

TEST_CASE("group closure cap") {
    CHECK_THROWS_AS(PermutationGroup({Permutation::from_cycles(6, {{1, 2, 3, 4, 5, 6}}),
                                      Permutation::from_cycles(6, {{1, 2}})},
                                     100),
                    CapExceeded);
}

TEST_CASE("Schreier-Sims order agrees with element closure") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t degree = 2 + rng() % 7;
        std::vector<Permutation> gens;
        for (std::size_t k = 0, count = 1 + rng() % 3; k < count; ++k) {
            std::vector<std::uint32_t> img(degree);
            std::iota(img.begin(), img.end(), 0u);
            std::shuffle(img.begin(), img.end(), rng);
            if (rng() % 3 == 0) {
                // sparse generators give intransitive and small groups
                std::iota(img.begin(), img.end(), 0u);
                std::swap(img[rng() % degree], img[rng() % degree]);
            }
            gens.emplace_back(img);
        }
        CHECK(group_order(gens) == PermutationGroup(gens).order());
    }
    std::vector<Permutation> s12{Permutation::from_cycles(12, {{1, 2}}),
                                 Permutation::from_cycles(12, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}})};
    CHECK(group_order(s12) == 479001600u);
    std::vector<Permutation> s21{Permutation::from_cycles(21, {{1, 2}}),
                                 Permutation::from_cycles(21, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16,
                                                                17, 18, 19, 20, 21}})};
    CHECK_THROWS_AS(group_order(s21), CapExceeded);
}
