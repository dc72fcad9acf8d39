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
#include <cmath>
#include <set>

#include "dessins/contextuality.hpp"
#include "dessins/error.hpp"
#include "dessins/geometry.hpp"

using namespace dessins;

namespace {

// Brute force over all 4-subsets: some cyclic order has commuting neighbours
// and anticommuting diagonals.
std::size_t brute_force_squares(unsigned n) {
    auto obs = enumerate_observables(n);
    const std::size_t m = obs.size();
    std::vector<std::vector<bool>> c(m, std::vector<bool>(m));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            c[a][b] = commutes(obs[a], obs[b]);
        }
    }
    std::size_t count = 0;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            for (std::size_t d = b + 1; d < m; ++d) {
                for (std::size_t e = d + 1; e < m; ++e) {
                    const std::size_t s[4] = {a, b, d, e};
                    // the three ways to split into two diagonals
                    const int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
                    bool ok = false;
                    for (const auto &sp : splits) {
                        std::size_t p = s[sp[0]], q = s[sp[1]], r = s[sp[2]], t = s[sp[3]];
                        ok = ok || (!c[p][q] && !c[r][t] && c[p][r] && c[p][t] && c[q][r] && c[q][t]);
                    }
                    count += ok ? 1 : 0;
                }
            }
        }
    }
    return count;
}

}  // namespace

TEST_CASE("line signs") {
    std::vector<PauliOperator> column{parse_pauli("XX"), parse_pauli("YY"), parse_pauli("ZZ")};
    CHECK(line_sign(column) == -1);
    std::vector<PauliOperator> row{parse_pauli("XI"), parse_pauli("XX"), parse_pauli("IX")};
    CHECK(line_sign(row) == 1);
    std::vector<PauliOperator> bad{parse_pauli("XI"), parse_pauli("ZI"), parse_pauli("YI")};
    CHECK_THROWS_AS(line_sign(bad), InputError);
    std::vector<PauliOperator> open{parse_pauli("XI"), parse_pauli("IX")};
    CHECK_THROWS_AS(line_sign(open), InputError);
}

TEST_CASE("configuration validation") {
    std::vector<PauliOperator> obs{parse_pauli("XI"), parse_pauli("IX"), parse_pauli("XX")};
    CHECK_NOTHROW(MagicConfiguration(obs, {{0, 1, 2}}));
    CHECK_THROWS_AS(MagicConfiguration(obs, {{0, 1, 3}}), InputError);
    auto dup = obs;
    dup[1] = dup[0];
    CHECK_THROWS_AS(MagicConfiguration(dup, {{0, 1, 2}}), InputError);
    auto phased = obs;
    phased[0] = parse_pauli("-XI");
    CHECK_THROWS_AS(MagicConfiguration(phased, {{0, 1, 2}}), InputError);
}

TEST_CASE("Mermin square from the catalog is magic") {
    auto grid = std::get<MagicConfiguration>(catalog("mermin_square"));
    auto cert = is_magic(grid);
    CHECK(cert.magic);
    CHECK(cert.negative_lines == 1);
    CHECK(cert.sign_product == -1);
    CHECK(cert.all_occurrences_even);
    auto squares = embedded_squares(grid);
    CHECK(squares.size() == 9);
    for (const auto &sq : squares) {
        CHECK(ChshQuadruple::satisfies_square(sq.sigma()));
        CHECK(std::abs(chsh_norm(sq) - 2 * std::sqrt(2.0)) < 1e-9);
    }
}

TEST_CASE("Mermin pentagram example is magic") {
    auto penta = std::get<MagicConfiguration>(catalog("pentagram_example"));
    auto cert = is_magic(penta);
    CHECK(cert.magic);
    CHECK(cert.occurrences == std::vector<std::size_t>(10, 2));
    CHECK(cert.negative_lines % 2 == 1);
}

TEST_CASE("a configuration with a point on one line is not magic") {
    std::vector<PauliOperator> obs{parse_pauli("XX"), parse_pauli("YY"), parse_pauli("ZZ")};
    auto cert = is_magic(MagicConfiguration(obs, {{0, 1, 2}}));
    CHECK_FALSE(cert.magic);
    CHECK_FALSE(cert.all_occurrences_even);
}

TEST_CASE("CHSH norm of the canonical square") {
    ChshQuadruple q({parse_pauli("IX"), parse_pauli("XI"), parse_pauli("IZ"), parse_pauli("ZI")});
    CHECK(std::abs(chsh_norm(q) - 2 * std::sqrt(2.0)) < 1e-12);
    CHECK_THROWS_AS(ChshQuadruple({parse_pauli("IX"), parse_pauli("IZ"), parse_pauli("XI"), parse_pauli("ZI")}),
                    InputError);
    // commuting quadruple: the classical bound
    CHECK(chsh_operator_norm({parse_pauli("XI"), parse_pauli("IX"), parse_pauli("XX"), parse_pauli("II")}) <= 2.0 + 1e-12);
}

TEST_CASE("square census matches brute force") {
    auto two = census_squares(2, 1);
    CHECK(two.count == 90);
    CHECK(two.count == brute_force_squares(2));
    CHECK(two.squares.size() == two.count);
    for (const auto &sq : two.squares) {
        CHECK(std::abs(chsh_norm(sq) - 2 * std::sqrt(2.0)) < 1e-9);
    }
    CHECK(census_squares(1, 1).count == brute_force_squares(1));
    auto three = census_squares(3, 2, false);
    CHECK(three.count == 30240);
    CHECK(three.count == brute_force_squares(3));
    CHECK(three.squares.empty());
}

TEST_CASE("square census does not depend on the thread count") {
    auto a = census_squares(2, 1);
    auto b = census_squares(2, 3);
    REQUIRE(a.count == b.count);
    for (std::size_t i = 0; i < a.count; ++i) {
        CHECK(a.squares[i].sigma() == b.squares[i].sigma());
    }
}
