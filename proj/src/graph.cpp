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

#include "dessins/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <fmt/format.h>

#include "dessins/error.hpp"

namespace dessins {

Graph::Graph(std::size_t vertices) : n_(vertices), words_((vertices + 63) / 64) {
    if (vertices > kMaxVertices) {
        throw CapExceeded(fmt::format("graphs are limited to {} vertices, got {}", kMaxVertices, vertices));
    }
    rows_.assign(n_ * words_, 0);
}

Graph::Graph(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>> &edges) : Graph(vertices) {
    for (const auto &[u, v] : edges) {
        add_edge(u, v);
    }
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (auto w : rows_) {
        total += static_cast<std::size_t>(__builtin_popcountll(w));
    }
    return total / 2;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) {
        throw InputError(fmt::format("edge ({}, {}) out of range for {} vertices", u, v, n_));
    }
    if (u == v) {
        throw InputError(fmt::format("loop at vertex {}", u));
    }
    rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t Graph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) {
        d += static_cast<std::size_t>(__builtin_popcountll(rows_[v * words_ + w]));
    }
    return d;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = rows_[v * words_ + w];
        while (bits) {
            out.push_back(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n_; ++u) {
        for (auto v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Graph Graph::complement() const {
    Graph c(n_);
    for (std::size_t u = 0; u < n_; ++u) {
        for (std::size_t v = u + 1; v < n_; ++v) {
            if (!has_edge(u, v)) {
                c.add_edge(u, v);
            }
        }
    }
    return c;
}

Graph Graph::induced(const std::vector<std::size_t> &vertices) const {
    Graph sub(vertices.size());
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (has_edge(vertices[a], vertices[b])) {
                sub.add_edge(a, b);
            }
        }
    }
    return sub;
}

Graph relabel(const Graph &g, const std::vector<std::uint32_t> &position) {
    if (position.size() != g.vertex_count()) {
        throw InputError("relabel: labeling size mismatch");
    }
    Graph out(g.vertex_count());
    for (const auto &[u, v] : g.edges()) {
        out.add_edge(position[u], position[v]);
    }
    return out;
}

namespace {

using Coloring = std::vector<std::uint32_t>;
using Certificate = std::vector<std::uint64_t>;
using boost::multiprecision::cpp_int;

struct Node {
    Coloring color;
    std::uint64_t invariant = 0;
    bool discrete = false;
};

struct Leaf {
    Coloring position;
    Certificate certificate;
};

class CanonicalSearch {
   public:
    explicit CanonicalSearch(const Graph &g) : g_(g), n_(g.vertex_count()) {
        adj_.resize(n_);
        for (std::size_t v = 0; v < n_; ++v) {
            for (auto u : g.neighbors(v)) {
                adj_[v].push_back(static_cast<std::uint32_t>(u));
            }
        }
    }

    GraphCanonicalForm run() {
        Node root;
        root.color.assign(n_, 0);
        refine(root);
        Result r = search(root);
        GraphCanonicalForm out;
        out.position = r.best.position;
        out.certificate = std::move(r.best.certificate);
        out.automorphism_count = r.automorphisms;
        return out;
    }

   private:
    struct Result {
        Leaf best;
        cpp_int automorphisms;
        Leaf reference;
        std::vector<std::uint64_t> reference_path;  // node invariants from this node down
    };

    // Equitable refinement: split colors by (color, multiset of neighbor
    // colors) until stable, renumbering colors by rank of their signature.
    void refine(Node &node) const {
        Coloring &color = node.color;
        std::vector<std::vector<std::uint32_t>> sig(n_);
        std::vector<std::uint32_t> order(n_);
        std::size_t classes = count_classes(color);
        std::uint64_t hash = 0;
        for (;;) {
            for (std::size_t v = 0; v < n_; ++v) {
                auto &s = sig[v];
                s.clear();
                s.push_back(color[v]);
                for (auto u : adj_[v]) {
                    s.push_back(color[u]);
                }
                std::sort(s.begin() + 1, s.end());
            }
            std::iota(order.begin(), order.end(), 0u);
            std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
            Coloring next(n_);
            std::uint32_t rank = 0;
            hash = 1469598103934665603ull;
            for (std::size_t i = 0; i < n_; ++i) {
                if (i > 0 && sig[order[i]] != sig[order[i - 1]]) {
                    rank = static_cast<std::uint32_t>(i);
                }
                next[order[i]] = rank;
                for (auto x : sig[order[i]]) {
                    hash = (hash ^ x) * 1099511628211ull;
                }
                hash = (hash ^ 0xffffffffull) * 1099511628211ull;
            }
            std::size_t next_classes = count_classes(next);
            color = std::move(next);
            if (next_classes == classes) {
                break;
            }
            classes = next_classes;
        }
        node.invariant = hash;
        node.discrete = classes == n_;
    }

    static std::size_t count_classes(const Coloring &color) {
        Coloring sorted = color;
        std::sort(sorted.begin(), sorted.end());
        return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }

    // Vertices of the non-singleton cell with the least color.
    std::vector<std::uint32_t> target_cell(const Node &node) const {
        std::vector<std::uint32_t> count(n_, 0);
        for (auto c : node.color) {
            ++count[c];
        }
        std::uint32_t target = 0;
        while (count[target] <= 1) {
            ++target;
        }
        std::vector<std::uint32_t> cell;
        for (std::uint32_t v = 0; v < n_; ++v) {
            if (node.color[v] == target) {
                cell.push_back(v);
            }
        }
        return cell;
    }

    Node individualize(const Node &node, std::uint32_t v) const {
        // Colors are ranks (start index of the cell), so v can take the cell's
        // own rank and the rest of the cell moves one step up.
        Node child;
        child.color = node.color;
        for (std::uint32_t u = 0; u < n_; ++u) {
            if (u != v && node.color[u] == node.color[v]) {
                child.color[u] = node.color[v] + 1;
            }
        }
        refine(child);
        return child;
    }

    Leaf make_leaf(const Node &node) const {
        Leaf leaf;
        leaf.position = node.color;
        std::vector<std::uint32_t> vertex_at(n_);
        for (std::uint32_t v = 0; v < n_; ++v) {
            vertex_at[node.color[v]] = v;
        }
        const std::size_t words = g_.words();
        leaf.certificate.assign(1 + n_ * words, 0);
        leaf.certificate[0] = n_;
        for (std::size_t i = 0; i < n_; ++i) {
            for (auto u : adj_[vertex_at[i]]) {
                std::uint32_t j = node.color[u];
                leaf.certificate[1 + i * words + j / 64] |= std::uint64_t{1} << (j % 64);
            }
        }
        return leaf;
    }

    Result search(const Node &node) const {
        if (node.discrete) {
            Leaf leaf = make_leaf(node);
            return Result{leaf, 1, leaf, {node.invariant}};
        }
        auto cell = target_cell(node);
        struct Rep {
            std::uint32_t vertex;
            Leaf reference;
            std::vector<std::uint64_t> path;
        };
        std::vector<Rep> reps;
        Result result;
        std::size_t first_orbit = 1;
        for (std::size_t idx = 0; idx < cell.size(); ++idx) {
            std::uint32_t w = cell[idx];
            Node child = individualize(node, w);
            bool placed = false;
            for (std::size_t r = reps.size(); r-- > 0;) {
                if (equivalent_leaf_exists(child, reps[r].reference, reps[r].path, 0, reps[r].vertex, w)) {
                    placed = true;
                    first_orbit += r == 0 ? 1 : 0;
                    break;
                }
            }
            if (placed) {
                continue;
            }
            Result sub = search(child);
            if (reps.empty()) {
                result.automorphisms = sub.automorphisms;
                result.reference = sub.reference;
                result.reference_path.push_back(node.invariant);
                result.reference_path.insert(result.reference_path.end(), sub.reference_path.begin(),
                                             sub.reference_path.end());
                result.best = std::move(sub.best);
            } else if (sub.best.certificate < result.best.certificate) {
                result.best = std::move(sub.best);
            }
            reps.push_back(Rep{w, std::move(sub.reference), std::move(sub.reference_path)});
        }
        result.automorphisms *= first_orbit;
        return result;
    }

    // Is there a leaf below `node` with the reference certificate whose
    // induced automorphism maps `from` to `to`?
    bool equivalent_leaf_exists(const Node &node, const Leaf &reference, const std::vector<std::uint64_t> &path,
                                std::size_t depth, std::uint32_t from, std::uint32_t to) const {
        if (depth >= path.size() || node.invariant != path[depth]) {
            return false;
        }
        if (node.discrete) {
            Leaf leaf = make_leaf(node);
            // phi = leaf^-1 o reference
            return leaf.certificate == reference.certificate && leaf.position[to] == reference.position[from];
        }
        for (auto v : target_cell(node)) {
            if (equivalent_leaf_exists(individualize(node, v), reference, path, depth + 1, from, to)) {
                return true;
            }
        }
        return false;
    }

    const Graph &g_;
    std::size_t n_;
    std::vector<std::vector<std::uint32_t>> adj_;
};

}  // namespace

GraphCanonicalForm canonical_form(const Graph &g) {
    if (g.vertex_count() == 0) {
        return GraphCanonicalForm{{}, {0}, 1};
    }
    return CanonicalSearch(g).run();
}

bool isomorphic(const Graph &a, const Graph &b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
        return false;
    }
    return canonical_form(a).certificate == canonical_form(b).certificate;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool none(const Bits &b) {
    return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
}

void bron_kerbosch(const Graph &g, std::vector<std::size_t> &clique, Bits p, Bits x,
                   std::vector<std::vector<std::size_t>> &out) {
    const std::size_t words = g.words();
    if (none(p)) {
        if (none(x)) {
            auto sorted = clique;
            std::sort(sorted.begin(), sorted.end());
            out.push_back(std::move(sorted));
        }
        return;
    }
    // pivot: vertex of P u X with most neighbors in P
    std::size_t pivot = 0;
    int best = -1;
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = p[w] | x[w];
        while (bits) {
            std::size_t u = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
            bits &= bits - 1;
            int count = 0;
            for (std::size_t k = 0; k < words; ++k) {
                count += __builtin_popcountll(p[k] & g.row(u)[k]);
            }
            if (count > best) {
                best = count;
                pivot = u;
            }
        }
    }
    Bits candidates(words);
    for (std::size_t w = 0; w < words; ++w) {
        candidates[w] = p[w] & ~g.row(pivot)[w];
    }
    for (std::size_t w = 0; w < words; ++w) {
        while (candidates[w]) {
            std::size_t v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(candidates[w]));
            candidates[w] &= candidates[w] - 1;
            Bits np(words), nx(words);
            for (std::size_t k = 0; k < words; ++k) {
                np[k] = p[k] & g.row(v)[k];
                nx[k] = x[k] & g.row(v)[k];
            }
            clique.push_back(v);
            bron_kerbosch(g, clique, std::move(np), std::move(nx), out);
            clique.pop_back();
            p[w] &= ~(std::uint64_t{1} << (v % 64));
            x[w] |= std::uint64_t{1} << (v % 64);
        }
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(const Graph &g) {
    std::vector<std::vector<std::size_t>> out;
    if (g.vertex_count() == 0) {
        return out;
    }
    Bits p(g.words(), 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        p[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    std::vector<std::size_t> clique;
    bron_kerbosch(g, clique, std::move(p), Bits(g.words(), 0), out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void max_clique64(const std::vector<std::uint64_t> &adj, std::uint64_t p, std::size_t size, std::size_t &best) {
    if (p == 0) {
        best = std::max(best, size);
        return;
    }
    while (p) {
        if (size + static_cast<std::size_t>(__builtin_popcountll(p)) <= best) {
            return;
        }
        std::size_t v = static_cast<std::size_t>(__builtin_ctzll(p));
        p &= p - 1;
        max_clique64(adj, p & adj[v], size + 1, best);
    }
}

}  // namespace

std::size_t independence_number(const Graph &g) {
    const std::size_t n = g.vertex_count();
    if (n > kIndependenceMaxVertices) {
        throw CapExceeded(fmt::format("independence number limited to {} vertices", kIndependenceMaxVertices));
    }
    std::vector<std::uint64_t> comp(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u != v && !g.has_edge(u, v)) {
                comp[u] |= std::uint64_t{1} << v;
            }
        }
    }
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::size_t best = 0;
    max_clique64(comp, all, 0, best);
    return best;
}

std::size_t edge_chromatic_number(const Graph &g) {
    if (g.vertex_count() > kEdgeColoringMaxVertices) {
        throw CapExceeded(fmt::format("edge chromatic number limited to {} vertices", kEdgeColoringMaxVertices));
    }
    auto edges = g.edges();
    if (edges.empty()) {
        return 0;
    }
    std::size_t max_degree = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        max_degree = std::max(max_degree, g.degree(v));
    }
    // used[v] = bitmask of colors on edges at v; colors beyond the first
    // unused one are interchangeable, so only that one is tried.
    std::vector<std::uint32_t> used(g.vertex_count(), 0);
    std::function<bool(std::size_t, std::size_t)> color_from = [&](std::size_t e, std::size_t opened) {
        if (e == edges.size()) {
            return true;
        }
        auto [u, v] = edges[e];
        std::uint32_t blocked = used[u] | used[v];
        for (std::size_t c = 0; c < std::min(max_degree, opened + 1); ++c) {
            std::uint32_t bit = 1u << c;
            if (blocked & bit) {
                continue;
            }
            used[u] |= bit;
            used[v] |= bit;
            if (color_from(e + 1, std::max(opened, c + 1))) {
                return true;
            }
            used[u] &= ~bit;
            used[v] &= ~bit;
        }
        return false;
    };
    return color_from(0, 0) ? max_degree : max_degree + 1;
}

bool is_bipartite(const Graph &g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (side[s] >= 0) {
            continue;
        }
        side[s] = 0;
        std::vector<std::size_t> queue{s};
        for (std::size_t k = 0; k < queue.size(); ++k) {
            std::size_t v = queue[k];
            for (auto u : g.neighbors(v)) {
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    queue.push_back(u);
                } else if (side[u] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_planar(const Graph &g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(g.vertex_count());
    for (const auto &[u, v] : g.edges()) {
        boost::add_edge(u, v, bg);
    }
    return boost::boyer_myrvold_planarity_test(bg);
}

GraphFacts graph_facts(const Graph &g) {
    GraphFacts facts;
    facts.vertices = g.vertex_count();
    facts.edges = g.edge_count();
    if (facts.vertices > 0) {
        facts.min_degree = g.degree(0);
        for (std::size_t v = 0; v < facts.vertices; ++v) {
            facts.min_degree = std::min(facts.min_degree, g.degree(v));
            facts.max_degree = std::max(facts.max_degree, g.degree(v));
        }
    }
    facts.independence_number = independence_number(g);
    if (facts.vertices <= kEdgeColoringMaxVertices) {
        facts.edge_chromatic_number = edge_chromatic_number(g);
    }
    facts.bipartite = is_bipartite(g);
    facts.planar = is_planar(g);
    return facts;
}

std::string to_dot(const Graph &g, const std::vector<std::string> &labels) {
    std::string out = "graph G {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        out += fmt::format("  {} [label=\"{}\"];\n", v, v < labels.size() ? labels[v] : std::to_string(v));
    }
    for (const auto &[u, v] : g.edges()) {
        out += fmt::format("  {} -- {};\n", u, v);
    }
    return out + "}\n";
}

std::string to_edge_list(const Graph &g) {
    std::string out = fmt::format("{} {}\n", g.vertex_count(), g.edge_count());
    for (const auto &[u, v] : g.edges()) {
        out += fmt::format("{} {}\n", u, v);
    }
    return out;
}

}  // namespace dessins
