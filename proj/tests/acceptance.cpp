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

// Acceptance suite: one line per criterion, "PASS" or "FAIL", with the
// measured values. `--only N` runs a single criterion; the exit status is
// nonzero when any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "dessins/belyi.hpp"
#include "dessins/contextuality.hpp"
#include "dessins/dessin.hpp"
#include "dessins/fpgroup.hpp"
#include "dessins/geometry.hpp"
#include "dessins/graph.hpp"
#include "dessins/io.hpp"

using namespace dessins;

namespace {

const double kTwoRootTwo = 2.0 * std::sqrt(2.0);

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string &what) {
        pass = pass && ok;
        notes.push_back((ok ? "" : "FAILED ") + what);
    }
    void info(const std::string &what) { notes.push_back(what); }
};

struct Criterion {
    int number;
    std::string title;
    double seconds;  // time limit
    std::function<void(Outcome &)> run;
};

std::string data_dir = "data";
unsigned threads = 0;

Dessin mermin_dessin() {
    return Dessin::make(Permutation::from_cycles(9, {{1, 2, 4, 8, 7, 3}, {5, 9, 6}}),
                        Permutation::from_cycles(9, {{2, 5}, {3, 6}, {4, 7}, {8, 9}}));
}

Poly poly(std::initializer_list<long> coeffs) {
    std::vector<QSqrt2> c;
    for (long x : coeffs) {
        c.emplace_back(x);
    }
    return Poly(c);
}

Graph rook_3x3() {
    Graph g(9);
    for (std::size_t u = 0; u < 9; ++u) {
        for (std::size_t v = u + 1; v < 9; ++v) {
            if (u / 3 == v / 3 || u % 3 == v % 3) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

void chsh(Outcome &o) {
    ChshQuadruple q({parse_pauli("IX"), parse_pauli("XI"), parse_pauli("IZ"), parse_pauli("ZI")});
    double norm = chsh_norm(q);
    o.require(std::abs(norm - kTwoRootTwo) < 1e-9, fmt::format("||C|| = {:.12f}", norm));
}

void squares_two(Outcome &o) {
    auto census = census_squares(2, threads);
    o.require(census.count == 90, fmt::format("{} squares", census.count));
    std::size_t off = 0;
    for (const auto &sq : census.squares) {
        off += std::abs(chsh_norm(sq) - kTwoRootTwo) < 1e-9 ? 0 : 1;
    }
    o.require(off == 0, fmt::format("{} members with ||C|| != 2 sqrt2", off));
}

void squares_three(Outcome &o) {
    auto census = census_squares(3, threads, false);
    o.require(census.count == 30240, fmt::format("{} squares", census.count));
}

void pentagrams(Outcome &o) {
    auto census = census_pentagrams(threads);
    o.require(census.count == 12096, fmt::format("{} pentagrams", census.count));
    std::size_t not_magic = 0, not_five = 0;
    for (const auto &p : census.pentagrams) {
        auto cert = is_magic(p);
        not_magic += cert.magic ? 0 : 1;
        not_five += cert.negative_lines == 5 ? 0 : 1;
    }
    o.require(not_magic == 0, fmt::format("{} members fail is_magic", not_magic));
    std::string hist;
    for (const auto &[neg, count] : census.negative_line_histogram) {
        hist += fmt::format("{}{}:{}", hist.empty() ? "" : " ", neg, count);
    }
    o.require(not_five == 0, fmt::format("{} members without five -III lines (negative lines {{{}}})", not_five, hist));
}

void mermin_square(Outcome &o) {
    auto grid = std::get<MagicConfiguration>(catalog("mermin_square"));
    auto cert = is_magic(grid);
    o.require(cert.magic, "is_magic");
    o.require(cert.negative_lines == 1, fmt::format("{} negative line(s)", cert.negative_lines));
    auto squares = embedded_squares(grid);
    o.require(squares.size() == 9, fmt::format("{} embedded squares", squares.size()));
}

void mermin_dessin_suite(Outcome &o) {
    auto d = mermin_dessin();
    auto pp = passport(d);
    o.require(pp.to_string() == "[6^1 3^1, 2^4 1^1, 6^1 3^1]", "passport " + pp.to_string());
    auto s = signature(d);
    o.require(s == Signature{2, 5, 2, 1}, fmt::format("signature ({},{},{},{})", s.black, s.white, s.faces, s.genus));
    auto group = monodromy_group(d);
    o.require(group.order == 36, fmt::format("monodromy order {}", group.order));
    auto classes = pair_stabilizer_classes(d);
    std::string orders;
    for (const auto &c : classes) {
        orders += fmt::format("{}{}", orders.empty() ? "" : ",", c.fingerprint.order);
    }
    o.require(classes.size() == 2 && classes[0].fingerprint.order == 2 && classes[1].fingerprint.order == 1,
              fmt::format("{} stabilizer classes, orders {}", classes.size(), orders));
    if (classes.size() != 2) {
        return;
    }
    auto m1 = induce_geometry(d, classes[0]);
    auto m2 = induce_geometry(d, classes[1]);
    o.require(isomorphic(m1.graph, rook_3x3()), "order-2 class graph ~ 3x3 rook's graph");
    o.require(m2.graph == m1.graph.complement(), "class graphs complementary");
    Graph both = m1.graph;
    for (const auto &[u, v] : m2.graph.edges()) {
        both.add_edge(u, v);
    }
    o.require(both.edge_count() == 36, "union is K9");
    auto lines = m1.geometry.lines();
    lines.insert(lines.end(), m2.geometry.lines().begin(), m2.geometry.lines().end());
    IncidenceGeometry hesse(m1.geometry.points(), lines);
    auto levi = levi_graph(hesse);
    bool degree_four = true;
    for (std::size_t p = 0; p < 9; ++p) {
        degree_four = degree_four && levi.degree(p) == 4;
    }
    bool three_point = std::all_of(lines.begin(), lines.end(), [](const auto &l) { return l.size() == 3; });
    o.require(hesse.point_count() == 9 && hesse.line_count() == 12 && three_point && degree_four,
              fmt::format("union geometry: {} points, {} lines, every point on 4 lines: {}", hesse.point_count(),
                          hesse.line_count(), degree_four ? "yes" : "no"));
}

void square_dessins(Outcome &o) {
    auto p = FinitePresentation::parse("gens: r0, r1; rels: r1^2, (r0*r1)^4");
    LowIndexOptions opts;
    opts.threads = threads;
    std::vector<Passport> found;
    for (const auto &t : low_index_subgroups(p, 4, opts)) {
        auto d = dessin_from_table(t);
        auto g = monodromy_group(d);
        if (g.order == 8 && g.name == std::optional<std::string>("D4")) {
            found.push_back(passport(d));
        }
    }
    std::string list;
    for (const auto &pp : found) {
        list += (list.empty() ? "" : " ") + pp.to_string();
    }
    o.require(found.size() >= 4, fmt::format("{} D4 dessins: {}", found.size(), list));
    o.require(std::find(found.begin(), found.end(), Passport::parse("[2^1 1^2, 2^2, 4^1]")) != found.end(),
              "b1 passport [2^1 1^2, 2^2, 4^1] present");

    const std::vector<std::pair<std::string, BelyiCandidate>> functions{
        {"x^2(2-x^2)", {poly({0, 0, 2, 0, -1}), poly({1})}},
        {"(x^2-1)^2", {poly({1, 0, -2, 0, 1}), poly({1})}},
        {"(x-1)^4/(4x(x-2))", {poly({1, -4, 6, -4, 1}), poly({0, -8, 4})}},
        {"(x-1)^4/(16x^2)", {poly({1, -4, 6, -4, 1}), poly({0, 0, 16})}},
    };
    std::set<Passport> matched;
    for (const auto &[name, f] : functions) {
        bool ok = critical_values_ok(f).ok;
        auto pp = passport_of(f);
        bool matches = false;
        for (const auto &t : low_index_subgroups(p, 4, opts)) {
            auto d = dessin_from_table(t);
            if (monodromy_group(d).order == 8 && matches_dessin(f, d)) {
                matches = true;
            }
        }
        if (matches) {
            matched.insert(pp);
        }
        o.require(ok && matches, fmt::format("{}: critical values {}, passport {} {}", name, ok ? "ok" : "BAD",
                                             pp.to_string(), matches ? "matched" : "unmatched"));
    }
    o.require(matched.size() == 4, fmt::format("{} distinct passports matched", matched.size()));
}

void pentagram_dessin(Outcome &o) {
    DessinFilter filter;
    filter.white = parse_cycle_type("2^4 1^2");
    filter.faces = parse_cycle_type("5^2");
    filter.group_order = 60;
    auto found = enumerate_dessins_direct(10, filter);
    o.info(fmt::format("{} dessin(s) pass the filter", found.size()));
    auto petersen = std::get<Graph>(catalog("petersen"));
    std::size_t good = 0;
    for (const auto &d : found) {
        auto classes = pair_stabilizer_classes(d);
        auto pp = passport(d);
        auto sig = signature(d);
        bool genus_zero = sig.black + sig.white + sig.faces == d.n_edges() + 2;
        bool geometry = false;
        if (classes.size() == 2 && classes[0].fingerprint.order == 2 && classes[1].fingerprint.order == 1) {
            auto z2 = induce_geometry(d, classes[0]);
            auto z1 = induce_geometry(d, classes[1]);
            geometry = isomorphic(z2.graph, petersen) && isomorphic(z1.graph, petersen.complement());
        }
        o.info(fmt::format("passport {} (black {}), B+W+F-n = {}, stabilizer classes {}, Petersen/complement: {}",
                           pp.to_string(), format_cycle_type(pp.entries[0]),
                           static_cast<long>(sig.black + sig.white + sig.faces) - static_cast<long>(d.n_edges()),
                           classes.size(), geometry ? "yes" : "no"));
        good += (genus_zero && geometry) ? 1 : 0;
    }
    o.require(good >= 1, fmt::format("{} dessin(s) inducing Petersen and its complement on the sphere", good));
}

void heptagram(Outcome &o) {
    auto g = collinearity_graph(std::get<IncidenceGeometry>(catalog("heptagram")));
    auto cliques = maximal_cliques(g);
    std::size_t hexads = 0;
    std::vector<std::vector<std::size_t>> triangles;
    for (const auto &c : cliques) {
        hexads += c.size() == 6 ? 1 : 0;
        if (c.size() == 3) {
            triangles.push_back(c);
        }
    }
    o.require(hexads == 7 && triangles.size() == 35 && cliques.size() == 42,
              fmt::format("{} cliques: {} hexads, {} triangles", cliques.size(), hexads, triangles.size()));
    auto tg = collinearity_graph(IncidenceGeometry(std::vector<std::string>(21), triangles));
    o.require(isomorphic(tg, std::get<Graph>(catalog("triangular(7)"))), "triangle geometry graph ~ triangular(7)");
    auto aut = canonical_form(tg).automorphism_count;
    o.require(aut == 5040, fmt::format("|Aut| = {}", aut.str()));
}

void gq22_suite(Outcome &o) {
    auto cliques = maximal_cliques(commutation_graph(2));
    bool all_three = std::all_of(cliques.begin(), cliques.end(), [](const auto &c) { return c.size() == 3; });
    o.require(cliques.size() == 15 && all_three, fmt::format("{} maximal cliques of the commutation graph", cliques.size()));
    auto gq = std::get<IncidenceGeometry>(catalog("gq22"));
    auto report = verify_generalized_polygon(gq, 4);
    o.require(report.pass && report.s == std::optional<std::size_t>(2) && report.t == std::optional<std::size_t>(2),
              fmt::format("(s,t) = ({},{}), diameter {}, girth {}", report.s.value_or(0), report.t.value_or(0),
                          report.diameter, report.girth.value_or(0)));
    auto hs = hyperplanes(gq);
    std::map<HyperplaneKind, std::size_t> kinds;
    for (const auto &h : hs) {
        ++kinds[h.kind];
    }
    o.require(hs.size() == 31 && kinds[HyperplaneKind::perp] == 15 && kinds[HyperplaneKind::grid] == 10 &&
                  kinds[HyperplaneKind::ovoid] == 6,
              fmt::format("{} hyperplanes: {} perp, {} grid, {} ovoid, {} other", hs.size(),
                          kinds[HyperplaneKind::perp], kinds[HyperplaneKind::grid], kinds[HyperplaneKind::ovoid],
                          kinds[HyperplaneKind::other]));
    std::size_t magic_grids = 0;
    for (const auto &h : hs) {
        if (h.kind != HyperplaneKind::grid) {
            continue;
        }
        std::vector<PauliOperator> obs;
        for (auto p : h.points) {
            obs.push_back(parse_pauli(gq.points()[p]));
        }
        std::vector<std::vector<std::size_t>> lines;
        for (const auto &line : internal_lines(gq, h.points)) {
            std::vector<std::size_t> local;
            for (auto p : line) {
                local.push_back(static_cast<std::size_t>(std::find(h.points.begin(), h.points.end(), p) -
                                                         h.points.begin()));
            }
            lines.push_back(local);
        }
        magic_grids += is_magic(MagicConfiguration(obs, lines)).magic ? 1 : 0;
    }
    o.require(magic_grids == kinds[HyperplaneKind::grid], fmt::format("{} magic grids", magic_grids));
    std::set<std::vector<std::size_t>> all;
    for (const auto &h : hs) {
        all.insert(h.points);
    }
    std::size_t pairs = 0, closed = 0;
    for (std::size_t a = 0; a < hs.size(); ++a) {
        for (std::size_t b = a + 1; b < hs.size(); ++b) {
            ++pairs;
            try {
                closed += all.count(hyperplane_add(hs[a].points, hs[b].points, gq));
            } catch (const std::exception &) {
            }
        }
    }
    o.require(pairs == 465 && closed == pairs, fmt::format("hyperplane_add closed on {}/{} pairs", closed, pairs));
}

void petersen_suite(Outcome &o) {
    auto p = std::get<Graph>(catalog("petersen"));
    auto facts = graph_facts(p);
    o.require(facts.independence_number == 4, fmt::format("independence number {}", facts.independence_number));
    o.require(facts.edge_chromatic_number == std::optional<std::size_t>(4),
              fmt::format("edge chromatic number {}", facts.edge_chromatic_number.value_or(0)));
    auto aut = canonical_form(p).automorphism_count;
    o.require(aut == 120, fmt::format("|Aut| = {}", aut.str()));
    o.require(isomorphic(p.complement(), std::get<Graph>(catalog("triangular(5)"))), "complement ~ triangular(5)");
}

void todd_coxeter(Outcome &o) {
    auto a5 = FinitePresentation::parse("gens: a, b; rels: a^2, b^3, (a*b)^5");
    auto t = coset_enumerate(a5, {}, 1'000'000);
    o.require(t.index() == 60 && verify_table(a5, t), fmt::format("index of the trivial subgroup {}", t.index()));
    auto cart = FinitePresentation::cartographic();
    LowIndexOptions opts;
    opts.threads = threads;
    auto tables = low_index_subgroups(cart, 6, opts);
    std::string counts;
    bool agree = true;
    for (std::size_t n = 1; n <= 6; ++n) {
        std::size_t low = static_cast<std::size_t>(
            std::count_if(tables.begin(), tables.end(), [n](const CosetTable &c) { return c.index() == n; }));
        std::size_t direct = enumerate_dessins_direct(n).size();
        agree = agree && low == direct;
        counts += fmt::format("{}n={}: {}/{}", counts.empty() ? "" : ", ", n, low, direct);
    }
    o.require(agree, "low-index/direct counts " + counts);
}

void hexagon(Outcome &o) {
    auto geom = io::geometry_from_json(io::read_json_file(data_dir + "/gh22.json"));
    auto report = verify_generalized_polygon(geom, 6);
    o.require(geom.point_count() == 63 && geom.line_count() == 63,
              fmt::format("{} points, {} lines", geom.point_count(), geom.line_count()));
    o.require(report.s == std::optional<std::size_t>(2) && report.t == std::optional<std::size_t>(2),
              fmt::format("(s,t) = ({},{})", report.s.value_or(0), report.t.value_or(0)));
    o.require(report.pass && report.diameter == 6 && report.girth == std::optional<std::size_t>(12),
              fmt::format("Levi diameter {}, girth {}", report.diameter, report.girth.value_or(0)));
    // stretch goal, reported but not required
    auto aut = canonical_form(levi_graph(geom)).automorphism_count;
    o.info(fmt::format("|Aut(Levi graph)| = {} (12096 expected; informational)", aut.str()));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Acceptance checks"};
    int only = 0;
    app.add_option("--only", only, "Run a single criterion (1-13)");
    app.add_option("--data", data_dir, "Directory holding gh22.json");
    app.add_option("--threads", threads, "Worker threads (0 = all cores)");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria{
        {1, "chsh norm IX XI IZ ZI = 2 sqrt2", 1, chsh},
        {2, "two-qubit square census = 90", 5, squares_two},
        {3, "three-qubit square census = 30240", 60, squares_three},
        {4, "three-qubit pentagram census = 12096", 600, pentagrams},
        {5, "catalog Mermin square", 1, mermin_square},
        {6, "Mermin dessin", 10, mermin_dessin_suite},
        {7, "square dessins and their Belyi functions", 30, square_dessins},
        {8, "pentagram dessin at 10 edges", 300, pentagram_dessin},
        {9, "heptagram", 30, heptagram},
        {10, "GQ(2,2)", 60, gq22_suite},
        {11, "Petersen graph", 60, petersen_suite},
        {12, "Todd-Coxeter and low-index cross-check", 120, todd_coxeter},
        {13, "GH(2,2) fixture", 300, hexagon},
    };

    bool all_pass = true;
    bool ran = false;
    for (const auto &c : criteria) {
        if (only != 0 && c.number != only) {
            continue;
        }
        ran = true;
        Outcome outcome;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(outcome);
        } catch (const std::exception &e) {
            outcome.require(false, std::string("exception: ") + e.what());
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        outcome.require(elapsed < c.seconds, fmt::format("{:.2f} s (limit {} s)", elapsed, c.seconds));
        all_pass = all_pass && outcome.pass;
        std::string details;
        for (const auto &n : outcome.notes) {
            details += (details.empty() ? "" : "; ") + n;
        }
        std::printf("%s %2d %s: %s\n", outcome.pass ? "PASS" : "FAIL", c.number, c.title.c_str(), details.c_str());
        std::fflush(stdout);
    }
    if (!ran) {
        std::fprintf(stderr, "no criterion numbered %d\n", only);
        return 2;
    }
    return all_pass ? 0 : 1;
}
