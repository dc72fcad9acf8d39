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

#include "dessins/error.hpp"
#include "dessins/io.hpp"

using namespace dessins;
using io::json;

TEST_CASE("dessin JSON") {
    auto j = json::parse(R"({ "edges": 9, "alpha": [[1,2,4,8,7,3],[5,9,6]], "beta": [[2,5],[3,6],[4,7],[8,9],[1]] })");
    auto d = io::dessin_from_json(j);
    CHECK(d.n_edges() == 9);
    auto out = io::to_json(d);
    CHECK(out["beta"].size() == 4);
    CHECK(io::dessin_from_json(out) == d);
    CHECK(io::to_json(io::dessin_from_json(out)) == out);
    CHECK_THROWS_AS(io::dessin_from_json(json::parse(R"({"edges": 2, "alpha": [[1,3]], "beta": []})")), InputError);
    CHECK_THROWS_AS(io::dessin_from_json(json::parse(R"({"alpha": []})")), InputError);
    CHECK_THROWS_AS(io::dessin_from_json(json::parse(R"({"edges": 2, "alpha": [["a"]], "beta": []})")), InputError);
}

TEST_CASE("magic configuration JSON") {
    auto grid = std::get<MagicConfiguration>(catalog("mermin_square"));
    auto j = io::to_json(grid);
    CHECK(j["observables"][1] == "XX");
    auto back = io::magic_from_json(j);
    CHECK(back.observables() == grid.observables());
    CHECK(back.lines() == grid.lines());
    CHECK_THROWS_AS(io::magic_from_json(json::parse(R"({"observables": ["XQ"], "lines": [[0]]})")), InputError);
}

TEST_CASE("geometry and graph JSON") {
    auto gq = std::get<IncidenceGeometry>(catalog("gq22"));
    CHECK(io::geometry_from_json(io::to_json(gq)) == gq);
    auto numbered = io::geometry_from_json(json::parse(R"({"points": 3, "lines": [[0,1,2]]})"));
    CHECK(numbered.points() == std::vector<std::string>{"0", "1", "2"});
    auto p = std::get<Graph>(catalog("petersen"));
    CHECK(io::graph_from_json(io::to_json(p)) == p);
    CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"vertices": 2, "edges": [[0,1,1]]})")), InputError);
    CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"vertices": 2, "edges": [[0,-1]]})")), InputError);
}

TEST_CASE("candidate JSON") {
    auto j = json::parse(R"({"num": [[0,0],[0,0],[2,0],[0,0],[-1,0]], "den": [[1,0]]})");
    auto f = io::candidate_from_json(j);
    CHECK(f.degree() == 4);
    CHECK(io::to_json(f) == j);
    auto q = io::candidate_from_json(json::parse(R"({"num": [[[1,2], "3/4"]], "den": [[0,1],[1,0]]})"));
    CHECK(q.numerator().leading() == QSqrt2(mpq_class(1, 2), mpq_class(3, 4)));
    CHECK(io::candidate_from_json(io::to_json(q)) == q);
    CHECK_THROWS_AS(io::rational_from_json(json::parse(R"([1, 0])")), InputError);
    CHECK_THROWS_AS(io::rational_from_json(json::parse(R"("x/2")")), InputError);
    CHECK_THROWS_AS(io::candidate_from_json(json::parse(R"({"num": [[1]], "den": [[1,0]]})")), InputError);
}

TEST_CASE("coset table JSON") {
    auto p = FinitePresentation::parse("gens: a, b; rels: a^2, b^2, (a*b)^3");
    auto t = coset_enumerate(p, {}, 100);
    auto j = io::to_json(t);
    CHECK(j["table"].size() == 6);
    CHECK(io::coset_table_from_json(j) == t);
    CHECK_THROWS_AS(io::coset_table_from_json(json::parse(R"({"generators": 1, "table": [[0]]})")), InputError);
}
