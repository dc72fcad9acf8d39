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
#include <set>

#include "dessins/error.hpp"
#include "dessins/fpgroup.hpp"

using namespace dessins;

namespace {

std::vector<Permutation> symmetric_group(std::size_t n) {
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0u);
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

bool transitive(const Permutation &a, const Permutation &b) {
    std::vector<bool> seen(a.degree(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (std::size_t w : {static_cast<std::size_t>(a(v)), static_cast<std::size_t>(b(v))}) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == a.degree();
}

// Transitive (alpha, beta) with beta^2 = 1 up to simultaneous conjugation,
// by comparing every pair against all its conjugates.
std::size_t brute_force_clean_dessins(std::size_t n) {
    auto sym = symmetric_group(n);
    std::set<std::vector<std::uint32_t>> classes;
    for (const auto &beta : sym) {
        if (!(beta * beta).is_identity()) {
            continue;
        }
        for (const auto &alpha : sym) {
            if (!transitive(alpha, beta)) {
                continue;
            }
            std::vector<std::uint32_t> best;
            for (const auto &c : sym) {
                auto a = alpha.conjugate_by(c);
                auto b = beta.conjugate_by(c);
                std::vector<std::uint32_t> key(a.images().begin(), a.images().end());
                key.insert(key.end(), b.images().begin(), b.images().end());
                if (best.empty() || key < best) {
                    best = key;
                }
            }
            classes.insert(best);
        }
    }
    return classes.size();
}

}  // namespace

TEST_CASE("presentation parsing") {
    auto p = FinitePresentation::parse("gens: r0,r1; rels: r1^2, (r0*r1)^4");
    CHECK(p.generator_count() == 2);
    REQUIRE(p.relators().size() == 2);
    CHECK(p.relators()[0] == Word{2, 2});
    CHECK(p.relators()[1] == Word{1, 2, 1, 2, 1, 2, 1, 2});
    CHECK(p.format_word(p.parse_word("r0^-2*r1")) == "r0^-2*r1");
    auto q = FinitePresentation::parse("gens: a, b; rels: a^2 = b^3");
    CHECK(q.relators()[0] == Word{1, 1, -2, -2, -2});
    CHECK_THROWS_AS(FinitePresentation::parse("gens: a; rels: b^2"), InputError);
    CHECK_THROWS_AS(FinitePresentation::parse("gens: a; rels: (a^2"), InputError);
    CHECK(FinitePresentation::cartographic().relators() == std::vector<Word>{{2, 2}});
}

TEST_CASE("free reduction and inversion") {
    CHECK(free_reduce({1, 2, -2, -1, 1}) == Word{1});
    CHECK(invert({1, -2}) == Word{2, -1});
}

TEST_CASE("coset enumeration of A5 on the trivial subgroup") {
    auto p = FinitePresentation::parse("gens: a, b; rels: a^2, b^3, (a*b)^5");
    CosetEnumerationStats stats;
    auto t = coset_enumerate(p, {}, 100000, &stats);
    CHECK(t.index() == 60);
    CHECK(verify_table(p, t));
    CHECK(stats.defined >= 60);
    // the regular action is faithful: the group generated is A5 again
    CHECK(PermutationGroup({t.action(0), t.action(1)}).order() == 60);
}

TEST_CASE("coset enumeration on subgroups") {
    auto p = FinitePresentation::parse("gens: a, b; rels: a^2, b^3, (a*b)^5");
    auto t = coset_enumerate(p, {p.parse_word("b")}, 100000);
    CHECK(t.index() == 20);
    CHECK(verify_table(p, t, {p.parse_word("b")}));
    auto s3 = FinitePresentation::parse("gens: a, b; rels: a^2, b^2, (a*b)^3");
    CHECK(coset_enumerate(s3, {}, 1000).index() == 6);
    CHECK(coset_enumerate(s3, {s3.parse_word("a")}, 1000).index() == 3);
}

TEST_CASE("coset enumeration reports the cap") {
    auto p = FinitePresentation::parse("gens: a, b; rels: a^2, b^3, (a*b)^7");
    CHECK_THROWS_AS(coset_enumerate(p, {}, 500), CapExceeded);
}

TEST_CASE("coset tables validate their entries") {
    CHECK_THROWS_AS(CosetTable(1, {0, 1}), InputError);
    CosetTable t(1, {0, 0});
    CHECK(t.index() == 1);
}

TEST_CASE("direct enumeration matches a brute-force count") {
    for (std::size_t n = 1; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(enumerate_dessins_direct(n).size() == brute_force_clean_dessins(n));
    }
}

TEST_CASE("low-index search and direct enumeration agree") {
    auto p = FinitePresentation::cartographic();
    auto tables = low_index_subgroups(p, 6, {16, false, 2});
    for (std::size_t n = 1; n <= 6; ++n) {
        CAPTURE(n);
        std::set<std::vector<std::uint32_t>> from_tables;
        for (const auto &t : tables) {
            if (t.index() == n) {
                CHECK(verify_table(p, t));
                from_tables.insert(canonical_form(dessin_from_table(t)));
            }
        }
        std::set<std::vector<std::uint32_t>> direct;
        for (const auto &d : enumerate_dessins_direct(n)) {
            direct.insert(canonical_form(d));
        }
        CHECK(from_tables.size() == static_cast<std::size_t>(
                                        std::count_if(tables.begin(), tables.end(),
                                                      [n](const CosetTable &t) { return t.index() == n; })));
        CHECK(from_tables == direct);
    }
}

TEST_CASE("low-index results do not depend on the thread count") {
    auto p = FinitePresentation::parse("gens: r0, r1; rels: r1^2, (r0*r1)^4");
    CHECK(low_index_subgroups(p, 5, {16, false, 1}) == low_index_subgroups(p, 5, {16, false, 3}));
}

TEST_CASE("low-index search respects its cap") {
    auto p = FinitePresentation::cartographic();
    CHECK_THROWS_AS(low_index_subgroups(p, 20), CapExceeded);
}

TEST_CASE("direct enumeration filters") {
    DessinFilter filter;
    filter.faces = parse_cycle_type("4^1");
    filter.group_order = 8;
    auto found = enumerate_dessins_direct(4, filter);
    CHECK_FALSE(found.empty());
    for (const auto &d : found) {
        CHECK(passport(d).entries[2] == parse_cycle_type("4^1"));
        CHECK(monodromy_group(d).order == 8);
    }
    CHECK_THROWS_AS(enumerate_dessins_direct(9), CapExceeded);
}
