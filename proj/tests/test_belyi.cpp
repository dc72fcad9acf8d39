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

#include <array>
#include <random>

#include "dessins/belyi.hpp"
#include "dessins/error.hpp"

using namespace dessins;

namespace {

Poly poly(std::initializer_list<long> coeffs) {
    std::vector<QSqrt2> c;
    for (long x : coeffs) {
        c.emplace_back(x);
    }
    return Poly(c);
}

const QSqrt2 kRoot2(0, 1);

// The four square dessins' functions.
BelyiCandidate f1() { return {poly({0, 0, 2, 0, -1}), poly({1})}; }
BelyiCandidate f2() { return {poly({1, 0, -2, 0, 1}), poly({1})}; }
BelyiCandidate f3() { return {poly({1, -4, 6, -4, 1}), poly({0, -8, 4})}; }
BelyiCandidate f4() { return {poly({1, -4, 6, -4, 1}), poly({0, 0, 16})}; }

Dessin dessin(std::vector<std::vector<std::uint32_t>> alpha, std::vector<std::vector<std::uint32_t>> beta) {
    return Dessin::make(Permutation::from_cycles(4, alpha), Permutation::from_cycles(4, beta));
}

Dessin b1() { return dessin({{2, 3}}, {{1, 2}, {3, 4}}); }
Dessin b2() { return dessin({{1, 2}, {3, 4}}, {{2, 3}}); }
Dessin b3() { return dessin({{1, 2, 3, 4}}, {{1, 2}, {3, 4}}); }

}  // namespace

TEST_CASE("field arithmetic") {
    QSqrt2 a(1, 1), b(1, -1);
    CHECK(a * b == QSqrt2(-1));
    CHECK(a.conjugate() == b);
    CHECK(a / a == QSqrt2(1));
    CHECK((a / b) * b == a);
    CHECK(kRoot2 * kRoot2 == QSqrt2(2));
    CHECK_THROWS_AS(a / QSqrt2(), InputError);
    CHECK(QSqrt2(mpq_class(1, 2), 3).to_string() == "1/2+3*sqrt2");
    CHECK(QSqrt2(0, -1).to_string() == "-sqrt2");
}

TEST_CASE("polynomial arithmetic") {
    Poly x2m2({QSqrt2(-2), QSqrt2(0), QSqrt2(1)});
    Poly xmr({-kRoot2, QSqrt2(1)});
    CHECK(gcd(x2m2, xmr) == xmr);
    CHECK(f1().numerator().derivative() == poly({0, 4, 0, -4}));
    CHECK(exact_divide(x2m2, xmr) == Poly({kRoot2, QSqrt2(1)}));
    CHECK_THROWS_AS(exact_divide(x2m2, poly({1, 1})), InputError);
    CHECK_THROWS_AS(divmod(x2m2, Poly()), InputError);
    CHECK(Poly().degree() == -1);
    CHECK(square_free_part(poly({1, 0, -2, 0, 1})) == poly({-1, 0, 1}));
    CHECK(multiplicity_profile(poly({0, 0, 2, 0, -1})) == CycleType{{2, 1}, {1, 2}});
    CHECK(poly({0, 0, 2, 0, -1}).to_string() == "-x^4 + 2*x^2");
}

TEST_CASE("candidate validation") {
    CHECK_THROWS_AS(BelyiCandidate(poly({1}), Poly()), InputError);
    CHECK_THROWS_AS(BelyiCandidate(poly({3}), poly({2})), InputError);
    CHECK_THROWS_AS(BelyiCandidate(poly({-1, 1}), poly({-1, 0, 1})), InputError);
    CHECK(f3().degree() == 4);
}

TEST_CASE("critical values") {
    for (const auto &f : {f1(), f2(), f3(), f4()}) {
        auto r = critical_values_ok(f);
        CHECK(r.ok);
        CHECK(r.witness == poly({1}));
    }
    CHECK(critical_values_ok(BelyiCandidate(poly({0, 0, 0, 1}), poly({1}))).ok);
    auto bad = critical_values_ok(BelyiCandidate(poly({0, -1, 1}), poly({1})));
    CHECK_FALSE(bad.ok);
    CHECK(bad.witness == Poly({QSqrt2(mpq_class(-1, 2)), QSqrt2(1)}));
    CHECK(bad.witness.evaluate(QSqrt2(mpq_class(1, 2))).is_zero());
    // f = 2 + 1/x^2: infinity maps to 2 with ramification 2
    auto at_infinity = critical_values_ok(BelyiCandidate(poly({1, 0, 2}), poly({0, 0, 1})));
    CHECK_FALSE(at_infinity.ok);
    CHECK(at_infinity.value_at_infinity == std::optional<QSqrt2>(QSqrt2(2)));
}

TEST_CASE("passports of the square functions") {
    CHECK(passport_of(f1()).to_string() == "[2^1 1^2, 2^2, 4^1]");
    CHECK(passport_of(f2()).to_string() == "[2^2, 2^1 1^2, 4^1]");
    CHECK(passport_of(f3()).to_string() == "[4^1, 2^2, 2^1 1^2]");
    CHECK(passport_of(f4()).to_string() == "[4^1, 2^1 1^2, 2^2]");
    // f4 - 1 has numerator (x^2 - 6x + 1)(x + 1)^2
    CHECK(f4().numerator() - f4().denominator() == poly({1, -6, 1}) * poly({1, 1}) * poly({1, 1}));
    for (const auto &f : {f1(), f2(), f3(), f4()}) {
        auto p = passport_of(f);
        CHECK(genus_from_passport(p, 4) == 0);
        for (const auto &entry : p.entries) {
            unsigned total = 0;
            for (auto [len, mult] : entry) {
                total += len * mult;
            }
            CHECK(total == 4);
        }
    }
}

TEST_CASE("matching against dessins") {
    CHECK(matches_dessin(f1(), b1()));
    CHECK(matches_dessin(f2(), b2()));
    CHECK(matches_dessin(f3(), b3()));
    CHECK_FALSE(matches_dessin(f1(), b2()));
}

TEST_CASE("Galois conjugation preserves the checks") {
    BelyiCandidate twisted = precompose_mobius(f1(), QSqrt2(1), kRoot2, QSqrt2(0), QSqrt2(1));
    CHECK(critical_values_ok(twisted).ok);
    for (const auto &f : {f1(), f2(), f3(), f4(), twisted}) {
        auto g = f.conjugate();
        CHECK(critical_values_ok(g).ok == critical_values_ok(f).ok);
        CHECK(passport_of(g) == passport_of(f));
    }
    CHECK_FALSE(twisted.conjugate() == twisted);
}

TEST_CASE("Moebius images of the square functions") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> small(-3, 3);
    std::uniform_int_distribution<unsigned> pick(0, 3), perm(0, 5);
    const std::array<BelyiCandidate, 4> base{f1(), f2(), f3(), f4()};
    // entry order after post-composition with each map of {0, 1, inf}
    const std::array<std::array<int, 3>, 6> order{{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {2, 0, 1}, {1, 2, 0}}};
    int built = 0;
    while (built < 50) {
        QSqrt2 a(small(rng), small(rng)), b(small(rng), small(rng)), c(small(rng), 0), d(small(rng), small(rng));
        if ((a * d - b * c).is_zero()) {
            continue;
        }
        const auto &f = base[pick(rng)];
        unsigned k = perm(rng);
        auto g = permute_critical_values(precompose_mobius(f, a, b, c, d), k);
        ++built;
        CHECK(g.degree() == 4);
        CHECK(critical_values_ok(g).ok);
        auto expected = passport_of(f);
        auto got = passport_of(g);
        for (int e = 0; e < 3; ++e) {
            CHECK(got.entries[static_cast<std::size_t>(e)] == expected.entries[static_cast<std::size_t>(order[k][e])]);
        }
    }
}

TEST_CASE("vertex coordinates") {
    auto v = vertex_coordinates(f1());
    REQUIRE(v.black.size() == 3);
    CHECK(v.black[0].exact == std::optional<QSqrt2>(-kRoot2));
    CHECK(v.black[1].exact == std::optional<QSqrt2>(QSqrt2(0)));
    CHECK(v.black[1].multiplicity == 2);
    CHECK(v.black[2].exact == std::optional<QSqrt2>(kRoot2));
    REQUIRE(v.white.size() == 2);
    CHECK(v.white[0].exact == std::optional<QSqrt2>(QSqrt2(-1)));
    CHECK(v.white[1].exact == std::optional<QSqrt2>(QSqrt2(1)));
    CHECK(v.white[0].multiplicity == 2);
    CHECK(v.faces.empty());
    CHECK(v.faces_at_infinity == 4);

    auto w = vertex_coordinates(f2());
    REQUIRE(w.black.size() == 2);
    CHECK(w.black[0].multiplicity == 2);
    REQUIRE(w.white.size() == 3);
    CHECK(w.white[1].exact == std::optional<QSqrt2>(QSqrt2(0)));
    CHECK(w.white[2].exact == std::optional<QSqrt2>(kRoot2));

    auto cube = vertex_coordinates(BelyiCandidate(poly({0, 0, 0, 1}), poly({1})));
    REQUIRE(cube.black.size() == 1);
    CHECK(cube.black[0].multiplicity == 3);
    // the roots of x^3 - 1 other than 1 are not real
    CHECK(cube.white.size() == 3);
    CHECK_FALSE(cube.white[0].exact.has_value());

    auto f3_coords = vertex_coordinates(f3());
    // white vertices are the roots 1 -+ sqrt2 of x^2 - 2x - 1
    REQUIRE(f3_coords.white.size() == 2);
    CHECK(f3_coords.white[0].exact == std::optional<QSqrt2>(QSqrt2(1, -1)));
    CHECK(f3_coords.white[1].exact == std::optional<QSqrt2>(QSqrt2(1, 1)));
}
