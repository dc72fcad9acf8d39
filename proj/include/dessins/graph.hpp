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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dessins {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
   public:
    static constexpr std::size_t kMaxVertices = 256;

    Graph() = default;
    explicit Graph(std::size_t vertices);
    Graph(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>> &edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const;
    /// Adds {u, v}; repeated edges are ignored, loops rejected.
    void add_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const {
        return (rows_[u * words_ + v / 64] >> (v % 64)) & 1u;
    }
    std::size_t degree(std::size_t v) const;
    std::vector<std::size_t> neighbors(std::size_t v) const;
    /// Edges (u < v), sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    Graph complement() const;
    /// Subgraph induced on `vertices`, relabeled in the given order.
    Graph induced(const std::vector<std::size_t> &vertices) const;

    std::size_t words() const { return words_; }
    const std::uint64_t *row(std::size_t v) const { return rows_.data() + v * words_; }

    friend bool operator==(const Graph &, const Graph &) = default;

   private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
};

struct GraphCanonicalForm {
    /// position[v] = index of v in the canonical ordering.
    std::vector<std::uint32_t> position;
    /// Vertex count followed by the adjacency rows of the canonically
    /// relabeled graph. Equal certificates iff isomorphic graphs.
    std::vector<std::uint64_t> certificate;
    boost::multiprecision::cpp_int automorphism_count;
};

/// Canonical labeling by individualization and refinement, with subtrees in
/// the same automorphism orbit explored once.
GraphCanonicalForm canonical_form(const Graph &g);

bool isomorphic(const Graph &a, const Graph &b);

/// Applies the relabeling v -> position[v].
Graph relabel(const Graph &g, const std::vector<std::uint32_t> &position);

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted, the list
/// sorted lexicographically. Isolated vertices give singleton cliques.
std::vector<std::vector<std::size_t>> maximal_cliques(const Graph &g);

inline constexpr std::size_t kIndependenceMaxVertices = 64;
inline constexpr std::size_t kEdgeColoringMaxVertices = 30;

struct GraphFacts {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    std::size_t independence_number = 0;
    std::optional<std::size_t> edge_chromatic_number;
    bool bipartite = false;
    bool planar = false;
};

/// Exact independence number (<= 64 vertices, else CapExceeded), edge
/// chromatic number when the graph has <= 30 vertices, bipartite and planarity
/// flags.
GraphFacts graph_facts(const Graph &g);

std::size_t independence_number(const Graph &g);
/// Smallest k admitting a proper k-edge-coloring (Vizing: max degree or one more).
std::size_t edge_chromatic_number(const Graph &g);
bool is_bipartite(const Graph &g);
bool is_planar(const Graph &g);

std::string to_dot(const Graph &g, const std::vector<std::string> &labels = {});
/// "n m" header then one "u v" line per edge.
std::string to_edge_list(const Graph &g);

}  // namespace dessins
