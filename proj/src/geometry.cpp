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

#include "dessins/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "dessins/error.hpp"

namespace dessins {

IncidenceGeometry::IncidenceGeometry(std::vector<std::string> points, std::vector<std::vector<std::size_t>> lines)
    : points_(std::move(points)), lines_(std::move(lines)) {
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t l = 0; l < lines_.size(); ++l) {
        auto &line = lines_[l];
        std::sort(line.begin(), line.end());
        if (std::adjacent_find(line.begin(), line.end()) != line.end()) {
            throw InputError(fmt::format("line {} repeats a point", l));
        }
        if (!line.empty() && line.back() >= points_.size()) {
            throw InputError(fmt::format("line {} refers to point {} of {}", l, line.back(), points_.size()));
        }
        if (!seen.insert(line).second) {
            throw InputError(fmt::format("line {} is a duplicate", l));
        }
    }
}

Graph collinearity_graph(const IncidenceGeometry &geom) {
    Graph g(geom.point_count());
    for (const auto &line : geom.lines()) {
        for (std::size_t a = 0; a < line.size(); ++a) {
            for (std::size_t b = a + 1; b < line.size(); ++b) {
                g.add_edge(line[a], line[b]);
            }
        }
    }
    return g;
}

Graph levi_graph(const IncidenceGeometry &geom) {
    Graph g(geom.point_count() + geom.line_count());
    for (std::size_t l = 0; l < geom.line_count(); ++l) {
        for (auto p : geom.lines()[l]) {
            g.add_edge(p, geom.point_count() + l);
        }
    }
    return g;
}

Graph commutation_graph(unsigned n_qubits) {
    auto obs = enumerate_observables(n_qubits);
    Graph g(obs.size());
    for (std::size_t a = 0; a < obs.size(); ++a) {
        for (std::size_t b = a + 1; b < obs.size(); ++b) {
            if (commutes(obs[a], obs[b])) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

std::vector<StabilizerClass> pair_stabilizer_classes(const Dessin &d, std::size_t cap) {
    const std::size_t n = d.n_edges();
    PermutationGroup group({d.alpha(), d.beta()}, cap);

    std::vector<std::uint64_t> distinct_orders;
    for (std::size_t e = 0; e < group.order(); ++e) {
        distinct_orders.push_back(group.element_order(e));
    }
    std::sort(distinct_orders.begin(), distinct_orders.end());
    distinct_orders.erase(std::unique(distinct_orders.begin(), distinct_orders.end()), distinct_orders.end());
    const std::size_t k = distinct_orders.size();

    // histogram[(i * n + j) * k + o] = elements of order index o fixing i and j
    std::vector<std::uint64_t> histogram(n * n * k, 0);
    std::vector<std::size_t> fixed;
    for (std::size_t e = 0; e < group.order(); ++e) {
        auto images = group.element(e);
        fixed.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (images[i] == i) {
                fixed.push_back(i);
            }
        }
        std::size_t o = static_cast<std::size_t>(
            std::lower_bound(distinct_orders.begin(), distinct_orders.end(), group.element_order(e)) -
            distinct_orders.begin());
        for (std::size_t a = 0; a < fixed.size(); ++a) {
            for (std::size_t b = a + 1; b < fixed.size(); ++b) {
                ++histogram[(fixed[a] * n + fixed[b]) * k + o];
            }
        }
    }

    std::map<GroupFingerprint, StabilizerClass> classes;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            GroupFingerprint fp;
            for (std::size_t o = 0; o < k; ++o) {
                auto count = histogram[(i * n + j) * k + o];
                if (count > 0) {
                    fp.element_orders[distinct_orders[o]] = count;
                    fp.order += count;
                }
            }
            auto &cls = classes[fp];
            cls.fingerprint = fp;
            cls.pairs.emplace_back(i, j);
        }
    }
    std::vector<StabilizerClass> out;
    for (auto &[fp, cls] : classes) {
        bool abelian = true;
        for (const auto &[order, count] : fp.element_orders) {
            // a group whose elements all have order <= 2 is abelian; beyond
            // that the name is left to the fingerprint table
            abelian = abelian && order <= 2;
        }
        cls.name = identify_group(fp, abelian || fp.element_orders.rbegin()->first == fp.order);
        out.push_back(std::move(cls));
    }
    std::stable_sort(out.begin(), out.end(), [](const StabilizerClass &a, const StabilizerClass &b) {
        if (a.fingerprint.order != b.fingerprint.order) {
            return a.fingerprint.order > b.fingerprint.order;
        }
        return a.fingerprint.element_orders < b.fingerprint.element_orders;
    });
    return out;
}

InducedGeometry induce_geometry(const Dessin &d, const StabilizerClass &c) {
    const std::size_t n = d.n_edges();
    Graph g(n);
    for (const auto &[i, j] : c.pairs) {
        if (j >= n) {
            throw InputError(fmt::format("pair ({}, {}) outside a dessin with {} edges", i, j, n));
        }
        g.add_edge(i, j);
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i + 1));
    }
    std::vector<std::vector<std::size_t>> lines;
    for (auto &clique : maximal_cliques(g)) {
        if (clique.size() >= 2) {
            lines.push_back(std::move(clique));
        }
    }
    return InducedGeometry{std::move(g), IncidenceGeometry(std::move(labels), std::move(lines))};
}

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    auto rec = [&](auto &&self, std::size_t start) -> void {
        if (current.size() == k) {
            out.push_back(current);
            return;
        }
        for (std::size_t v = start; v < n; ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

bool disjoint(const std::vector<std::size_t> &a, const std::vector<std::size_t> &b) {
    for (auto x : a) {
        if (std::find(b.begin(), b.end(), x) != b.end()) {
            return false;
        }
    }
    return true;
}

Graph subset_graph(std::size_t n, std::size_t k, bool adjacent_when_disjoint) {
    auto sets = subsets(n, k);
    Graph g(sets.size());
    for (std::size_t a = 0; a < sets.size(); ++a) {
        for (std::size_t b = a + 1; b < sets.size(); ++b) {
            if (disjoint(sets[a], sets[b]) == adjacent_when_disjoint) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

std::string subset_label(const std::vector<std::size_t> &s) {
    std::string out;
    for (auto v : s) {
        out += std::to_string(v + 1);
    }
    return out;
}

MagicConfiguration make_configuration(const std::vector<std::string> &labels,
                                      std::vector<std::vector<std::size_t>> lines) {
    std::vector<PauliOperator> obs;
    for (const auto &l : labels) {
        obs.push_back(parse_pauli(l));
    }
    return MagicConfiguration(std::move(obs), std::move(lines));
}

// "name(a,b)" -> ("name", {a, b})
std::pair<std::string, std::vector<std::size_t>> split_name(const std::string &name) {
    auto open = name.find('(');
    if (open == std::string::npos) {
        return {name, {}};
    }
    if (name.back() != ')') {
        throw InputError(fmt::format("malformed catalog name '{}'", name));
    }
    std::vector<std::size_t> args;
    std::string inner = name.substr(open + 1, name.size() - open - 2);
    std::size_t start = 0;
    while (start <= inner.size()) {
        auto comma = inner.find(',', start);
        std::string part = inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
            throw InputError(fmt::format("bad catalog argument '{}' in '{}'", part, name));
        }
        args.push_back(value);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return {name.substr(0, open), args};
}

void expect_args(const std::string &name, const std::vector<std::size_t> &args, std::size_t count) {
    if (args.size() != count) {
        throw InputError(fmt::format("catalog entry '{}' takes {} argument(s)", name, count));
    }
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"mermin_square", "pentagram_example", "petersen", "kneser(n,k)",  "triangular(n)",
            "desargues_configuration", "gq22", "heptagram", "hesse_union_check", "k(n)"};
}

CatalogEntry catalog(const std::string &full_name) {
    auto [name, args] = split_name(full_name);
    if (name == "mermin_square") {
        expect_args(name, args, 0);
        // rows, then columns; the middle column XX.YY.ZZ is the negative line
        return make_configuration({"XI", "XX", "IX", "IZ", "ZZ", "ZI", "XZ", "YY", "ZX"},
                                  {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
    }
    if (name == "pentagram_example") {
        expect_args(name, args, 0);
        return make_configuration({"XXX", "XYY", "YXY", "YYX", "XII", "IXI", "IIX", "YII", "IYI", "IIY"},
                                  {{0, 1, 2, 3}, {0, 4, 5, 6}, {1, 4, 8, 9}, {2, 7, 5, 9}, {3, 7, 8, 6}});
    }
    if (name == "petersen") {
        expect_args(name, args, 0);
        Graph g(10);
        for (std::size_t i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        return g;
    }
    if (name == "kneser") {
        expect_args(name, args, 2);
        if (args[1] == 0 || args[0] < args[1] || args[0] > 16) {
            throw InputError("kneser(n,k) needs 1 <= k <= n <= 16");
        }
        return subset_graph(args[0], args[1], true);
    }
    if (name == "triangular") {
        expect_args(name, args, 1);
        if (args[0] < 2 || args[0] > 22) {
            throw InputError("triangular(n) needs 2 <= n <= 22");
        }
        return subset_graph(args[0], 2, false);
    }
    if (name == "k") {
        expect_args(name, args, 1);
        if (args[0] > Graph::kMaxVertices) {
            throw InputError(fmt::format("k(n) needs n <= {}", Graph::kMaxVertices));
        }
        Graph g(args[0]);
        for (std::size_t u = 0; u < args[0]; ++u) {
            for (std::size_t v = u + 1; v < args[0]; ++v) {
                g.add_edge(u, v);
            }
        }
        return g;
    }
    if (name == "desargues_configuration") {
        expect_args(name, args, 0);
        // points: pairs from five letters; lines: triples, through their pairs
        auto pairs = subsets(5, 2);
        std::vector<std::string> labels;
        for (const auto &p : pairs) {
            labels.push_back(subset_label(p));
        }
        std::vector<std::vector<std::size_t>> lines;
        for (const auto &t : subsets(5, 3)) {
            std::vector<std::size_t> line;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if (std::includes(t.begin(), t.end(), pairs[i].begin(), pairs[i].end())) {
                    line.push_back(i);
                }
            }
            lines.push_back(line);
        }
        return IncidenceGeometry(labels, lines);
    }
    if (name == "gq22") {
        expect_args(name, args, 0);
        auto obs = enumerate_observables(2);
        std::vector<std::string> labels;
        for (const auto &o : obs) {
            labels.push_back(o.to_string());
        }
        std::set<std::vector<std::size_t>> lines;
        for (std::size_t a = 0; a < obs.size(); ++a) {
            for (std::size_t b = a + 1; b < obs.size(); ++b) {
                if (!commutes(obs[a], obs[b])) {
                    continue;
                }
                auto c = multiply(obs[a], obs[b]).without_phase();
                auto it = std::find_if(obs.begin(), obs.end(), [&](const PauliOperator &o) {
                    return o.x_mask() == c.x_mask() && o.z_mask() == c.z_mask();
                });
                std::vector<std::size_t> line{a, b, static_cast<std::size_t>(it - obs.begin())};
                std::sort(line.begin(), line.end());
                lines.insert(line);
            }
        }
        return IncidenceGeometry(labels, {lines.begin(), lines.end()});
    }
    if (name == "heptagram") {
        expect_args(name, args, 0);
        auto pairs = subsets(7, 2);
        std::vector<std::string> labels;
        for (const auto &p : pairs) {
            labels.push_back(subset_label(p));
        }
        std::vector<std::vector<std::size_t>> lines(7);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            lines[pairs[i][0]].push_back(i);
            lines[pairs[i][1]].push_back(i);
        }
        return IncidenceGeometry(labels, lines);
    }
    if (name == "hesse_union_check") {
        expect_args(name, args, 0);
        // affine plane over Z3: point (x, y) has index 3x + y
        std::vector<std::string> labels;
        for (std::size_t x = 0; x < 3; ++x) {
            for (std::size_t y = 0; y < 3; ++y) {
                labels.push_back(fmt::format("{}{}", x, y));
            }
        }
        std::set<std::vector<std::size_t>> lines;
        const std::pair<std::size_t, std::size_t> directions[] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
        for (auto [dx, dy] : directions) {
            for (std::size_t p = 0; p < 9; ++p) {
                std::vector<std::size_t> line;
                for (std::size_t t = 0; t < 3; ++t) {
                    line.push_back(((p / 3 + t * dx) % 3) * 3 + (p % 3 + t * dy) % 3);
                }
                std::sort(line.begin(), line.end());
                lines.insert(line);
            }
        }
        return IncidenceGeometry(labels, {lines.begin(), lines.end()});
    }
    throw InputError(fmt::format("unknown catalog entry '{}'", full_name));
}

Graph catalog_graph(const CatalogEntry &entry) {
    if (const auto *g = std::get_if<Graph>(&entry)) {
        return *g;
    }
    if (const auto *geom = std::get_if<IncidenceGeometry>(&entry)) {
        return collinearity_graph(*geom);
    }
    const auto &config = std::get<MagicConfiguration>(entry);
    std::vector<std::string> labels(config.observables().size());
    return collinearity_graph(IncidenceGeometry(labels, config.lines()));
}

std::vector<std::string> catalog_matches(const Graph &g) {
    std::vector<std::string> names = {"mermin_square", "pentagram_example", "petersen", "desargues_configuration",
                                      "gq22", "heptagram", "hesse_union_check"};
    for (std::size_t n = 2; n <= 22; ++n) {
        if (n * (n - 1) / 2 == g.vertex_count()) {
            names.push_back(fmt::format("triangular({})", n));
        }
    }
    for (std::size_t n = 1; n <= 16; ++n) {
        std::size_t count = 1;
        for (std::size_t k = 1; k <= n / 2; ++k) {
            count = count * (n - k + 1) / k;
            if (count == g.vertex_count()) {
                names.push_back(fmt::format("kneser({},{})", n, k));
            }
        }
    }
    names.push_back(fmt::format("k({})", g.vertex_count()));

    auto target = canonical_form(g).certificate;
    std::vector<std::string> out;
    for (const auto &name : names) {
        Graph candidate = catalog_graph(catalog(name));
        if (candidate.vertex_count() == g.vertex_count() && candidate.edge_count() == g.edge_count() &&
            canonical_form(candidate).certificate == target) {
            out.push_back(name);
        }
    }
    return out;
}

PolygonReport verify_generalized_polygon(const IncidenceGeometry &geom, std::size_t n) {
    PolygonReport report;
    const Graph levi = levi_graph(geom);
    const std::size_t v = levi.vertex_count();
    if (v == 0) {
        throw InputError("empty geometry");
    }
    std::set<std::size_t> line_sizes, point_degrees;
    for (const auto &line : geom.lines()) {
        line_sizes.insert(line.size());
    }
    for (std::size_t p = 0; p < geom.point_count(); ++p) {
        point_degrees.insert(levi.degree(p));
    }
    if (line_sizes.size() == 1 && *line_sizes.begin() >= 1) {
        report.s = *line_sizes.begin() - 1;
    }
    if (point_degrees.size() == 1 && *point_degrees.begin() >= 1) {
        report.t = *point_degrees.begin() - 1;
    }

    std::vector<std::vector<std::size_t>> adj(v);
    for (std::size_t u = 0; u < v; ++u) {
        auto nb = levi.neighbors(u);
        adj[u].assign(nb.begin(), nb.end());
    }
    constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
    std::size_t girth = kUnseen;
    std::vector<std::size_t> dist(v), parent(v), queue;
    for (std::size_t root = 0; root < v; ++root) {
        std::fill(dist.begin(), dist.end(), kUnseen);
        dist[root] = 0;
        parent[root] = kUnseen;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::size_t u = queue[head];
            for (auto w : adj[u]) {
                if (dist[w] == kUnseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    girth = std::min(girth, dist[u] + dist[w] + 1);
                }
            }
        }
        if (queue.size() != v) {
            throw InputError("incidence graph is disconnected");
        }
        report.diameter = std::max(report.diameter, dist[queue.back()]);
    }
    if (girth != kUnseen) {
        report.girth = girth;
    }
    report.pass = report.diameter == n && report.girth == 2 * n;
    return report;
}

std::string to_string(HyperplaneKind kind) {
    switch (kind) {
        case HyperplaneKind::ovoid:
            return "ovoid";
        case HyperplaneKind::perp:
            return "perp";
        case HyperplaneKind::grid:
            return "grid";
        case HyperplaneKind::other:
            break;
    }
    return "other";
}

bool is_hyperplane(const IncidenceGeometry &geom, const std::vector<std::size_t> &points) {
    std::vector<bool> in(geom.point_count(), false);
    std::size_t size = 0;
    for (auto p : points) {
        if (p >= geom.point_count()) {
            return false;
        }
        size += in[p] ? 0 : 1;
        in[p] = true;
    }
    if (size == geom.point_count()) {
        return false;
    }
    for (const auto &line : geom.lines()) {
        std::size_t hits = 0;
        for (auto p : line) {
            hits += in[p] ? 1 : 0;
        }
        if (hits != 1 && hits != line.size()) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<std::size_t>> internal_lines(const IncidenceGeometry &geom,
                                                     const std::vector<std::size_t> &points) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto &line : geom.lines()) {
        if (std::all_of(line.begin(), line.end(), [&](std::size_t p) {
                return std::find(points.begin(), points.end(), p) != points.end();
            })) {
            out.push_back(line);
        }
    }
    return out;
}

namespace {

class HyperplaneSearch {
   public:
    explicit HyperplaneSearch(const IncidenceGeometry &geom) : geom_(geom), lines_of_(geom.point_count()) {
        for (std::size_t l = 0; l < geom.line_count(); ++l) {
            for (auto p : geom.lines()[l]) {
                lines_of_[p].push_back(l);
            }
        }
    }

    std::vector<std::vector<std::size_t>> run() {
        state_.assign(geom_.point_count(), kFree);
        branch(0);
        return found_;
    }

   private:
    static constexpr int kFree = -1;

    // Sets p and forces the consequences along its lines. Returns false on a
    // contradiction; `trail` records every assignment for undo.
    bool assign(std::size_t p, int value, std::vector<std::size_t> &trail) {
        std::vector<std::size_t> pending{p};
        state_[p] = value;
        trail.push_back(p);
        while (!pending.empty()) {
            std::size_t q = pending.back();
            pending.pop_back();
            for (auto l : lines_of_[q]) {
                const auto &line = geom_.lines()[l];
                std::size_t ins = 0, outs = 0, free_point = 0;
                for (auto r : line) {
                    if (state_[r] == 1) {
                        ++ins;
                    } else if (state_[r] == 0) {
                        ++outs;
                    } else {
                        free_point = r;
                    }
                }
                // each 3-point line meets the hyperplane in 1 or 3 points
                if (ins == 2 && outs == 1) {
                    return false;
                }
                if (outs == 3) {
                    return false;
                }
                if (ins + outs == 2) {
                    int forced = (ins == 1 && outs == 1) ? 0 : 1;
                    state_[free_point] = forced;
                    trail.push_back(free_point);
                    pending.push_back(free_point);
                }
            }
        }
        return true;
    }

    void branch(std::size_t p) {
        while (p < state_.size() && state_[p] != kFree) {
            ++p;
        }
        if (p == state_.size()) {
            std::vector<std::size_t> h;
            for (std::size_t q = 0; q < state_.size(); ++q) {
                if (state_[q] == 1) {
                    h.push_back(q);
                }
            }
            if (h.size() < state_.size()) {
                found_.push_back(std::move(h));
            }
            return;
        }
        for (int value : {0, 1}) {
            std::vector<std::size_t> trail;
            if (assign(p, value, trail)) {
                branch(p + 1);
            }
            for (auto q : trail) {
                state_[q] = kFree;
            }
        }
    }

    const IncidenceGeometry &geom_;
    std::vector<std::vector<std::size_t>> lines_of_;
    std::vector<int> state_;
    std::vector<std::vector<std::size_t>> found_;
};

}  // namespace

std::vector<Hyperplane> hyperplanes(const IncidenceGeometry &geom) {
    if (geom.point_count() > kHyperplaneMaxPoints) {
        throw InputError(fmt::format("hyperplane search is limited to {} points", kHyperplaneMaxPoints));
    }
    for (const auto &line : geom.lines()) {
        if (line.size() != 3) {
            throw InputError("hyperplane search needs three points on every line");
        }
    }
    const Graph collinear = collinearity_graph(geom);
    std::set<std::vector<std::size_t>> perps;
    for (std::size_t p = 0; p < geom.point_count(); ++p) {
        auto perp = collinear.neighbors(p);
        perp.push_back(p);
        std::sort(perp.begin(), perp.end());
        perps.insert(perp);
    }

    std::vector<Hyperplane> out;
    for (auto &points : HyperplaneSearch(geom).run()) {
        Hyperplane h;
        auto inside = internal_lines(geom, points);
        h.internal_lines = inside.size();
        if (inside.empty()) {
            h.kind = HyperplaneKind::ovoid;
        } else if (perps.count(points)) {
            h.kind = HyperplaneKind::perp;
        } else {
            std::map<std::size_t, std::size_t> on;
            for (const auto &line : inside) {
                for (auto q : line) {
                    ++on[q];
                }
            }
            bool grid = std::all_of(points.begin(), points.end(), [&](std::size_t q) { return on[q] == 2; });
            h.kind = grid ? HyperplaneKind::grid : HyperplaneKind::other;
        }
        h.points = std::move(points);
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [](const Hyperplane &a, const Hyperplane &b) { return a.points < b.points; });
    return out;
}

std::vector<std::size_t> hyperplane_add(const std::vector<std::size_t> &h1, const std::vector<std::size_t> &h2,
                                        const IncidenceGeometry &geom) {
    if (!is_hyperplane(geom, h1) || !is_hyperplane(geom, h2)) {
        throw InputError("hyperplane_add: an input is not a hyperplane");
    }
    std::vector<bool> in1(geom.point_count(), false), in2(geom.point_count(), false);
    for (auto p : h1) {
        in1[p] = true;
    }
    for (auto p : h2) {
        in2[p] = true;
    }
    std::vector<std::size_t> sum;
    for (std::size_t p = 0; p < geom.point_count(); ++p) {
        if (in1[p] == in2[p]) {
            sum.push_back(p);
        }
    }
    if (sum.size() == geom.point_count()) {
        throw InputError("hyperplane_add: equal inputs sum to the whole point set");
    }
    if (!is_hyperplane(geom, sum)) {
        throw PropertyFailure("hyperplane_add: the sum is not a hyperplane");
    }
    return sum;
}

}  // namespace dessins
