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
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dessins/contextuality.hpp"
#include "dessins/dessin.hpp"
#include "dessins/graph.hpp"
#include "dessins/group.hpp"

namespace dessins {

/// Points with labels and lines given as sorted point-index lists.
class IncidenceGeometry {
   public:
    IncidenceGeometry() = default;
    /// Sorts each line; rejects out-of-range indices, repeated points on a
    /// line and duplicate lines.
    IncidenceGeometry(std::vector<std::string> points, std::vector<std::vector<std::size_t>> lines);

    std::size_t point_count() const { return points_.size(); }
    std::size_t line_count() const { return lines_.size(); }
    const std::vector<std::string> &points() const { return points_; }
    const std::vector<std::vector<std::size_t>> &lines() const { return lines_; }

    friend bool operator==(const IncidenceGeometry &, const IncidenceGeometry &) = default;

   private:
    std::vector<std::string> points_;
    std::vector<std::vector<std::size_t>> lines_;
};

/// Points adjacent iff they share a line.
Graph collinearity_graph(const IncidenceGeometry &geom);
/// Bipartite point-line incidence graph: points first, then lines.
Graph levi_graph(const IncidenceGeometry &geom);

/// Graph on all Hermitian n-qubit observables other than the identity,
/// adjacent iff they commute. Vertex order follows enumerate_observables.
Graph commutation_graph(unsigned n_qubits);

struct StabilizerClass {
    GroupFingerprint fingerprint;
    std::optional<std::string> name;
    /// Unordered edge-label pairs (i < j, 0-based).
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// Partitions all pairs of edge labels by the fingerprint of their pointwise
/// stabilizer in the monodromy group. Classes come in descending group order.
std::vector<StabilizerClass> pair_stabilizer_classes(const Dessin &d, std::size_t cap = PermutationGroup::kDefaultCap);

struct InducedGeometry {
    Graph graph;
    /// Lines are the maximal cliques of `graph` with at least two points.
    IncidenceGeometry geometry;
};

InducedGeometry induce_geometry(const Dessin &d, const StabilizerClass &c);

using CatalogEntry = std::variant<Graph, IncidenceGeometry, MagicConfiguration>;

/// Names accepted by catalog(), parameterized ones written with their
/// arguments, e.g. "kneser(n,k)".
std::vector<std::string> catalog_names();
/// Throws InputError for an unknown name or bad parameters.
CatalogEntry catalog(const std::string &name);
/// Graph view of a catalog entry (collinearity graph for geometries).
Graph catalog_graph(const CatalogEntry &entry);
/// Concrete catalog names whose graph is isomorphic to g.
std::vector<std::string> catalog_matches(const Graph &g);

struct PolygonReport {
    /// Set when all lines have s+1 points / all points lie on t+1 lines.
    std::optional<std::size_t> s;
    std::optional<std::size_t> t;
    std::size_t diameter = 0;
    /// Unset for an acyclic incidence graph.
    std::optional<std::size_t> girth;
    bool pass = false;
};

/// Generalized n-gon test on the incidence graph: passes iff its diameter is
/// n and its girth 2n. Throws InputError when the incidence graph is
/// disconnected.
PolygonReport verify_generalized_polygon(const IncidenceGeometry &geom, std::size_t n);

enum class HyperplaneKind { ovoid, perp, grid, other };
std::string to_string(HyperplaneKind kind);

struct Hyperplane {
    std::vector<std::size_t> points;
    std::size_t internal_lines = 0;
    HyperplaneKind kind = HyperplaneKind::other;
};

inline constexpr std::size_t kHyperplaneMaxPoints = 24;

/// Proper point subset meeting every line in one point or containing it.
bool is_hyperplane(const IncidenceGeometry &geom, const std::vector<std::size_t> &points);
/// Lines of geom lying entirely inside `points`.
std::vector<std::vector<std::size_t>> internal_lines(const IncidenceGeometry &geom,
                                                     const std::vector<std::size_t> &points);

/// All hyperplanes of a geometry with three points per line, sorted by point
/// list. Kinds: no internal line (ovoid), a point together with all points
/// collinear with it (perp), every point on exactly two internal lines
/// (grid), anything else.
std::vector<Hyperplane> hyperplanes(const IncidenceGeometry &geom);

/// Complement of the symmetric difference of two hyperplanes. Throws
/// InputError if an input is not a hyperplane or the result is the whole
/// point set, PropertyFailure if the result is not a hyperplane.
std::vector<std::size_t> hyperplane_add(const std::vector<std::size_t> &h1, const std::vector<std::size_t> &h2,
                                        const IncidenceGeometry &geom);

}  // namespace dessins
