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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dessins/group.hpp"
#include "dessins/permutation.hpp"

namespace dessins {

/// A dessin d'enfant as a transitive permutation pair on edge labels:
/// alpha rotates edges around black vertices, beta around white vertices and
/// gamma = (alpha * beta)^-1 around faces, so alpha * beta * gamma = 1.
class Dessin {
   public:
    /// Validates degrees and transitivity; throws InputError listing the
    /// orbits of a disconnected pair.
    static Dessin make(Permutation alpha, Permutation beta);

    std::size_t n_edges() const { return alpha_.degree(); }
    const Permutation &alpha() const { return alpha_; }
    const Permutation &beta() const { return beta_; }
    const Permutation &gamma() const { return gamma_; }
    /// beta is an involution (white vertices of valency <= 2).
    bool is_clean() const;

    friend bool operator==(const Dessin &, const Dessin &) = default;

   private:
    Dessin(Permutation alpha, Permutation beta, Permutation gamma)
        : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {}

    Permutation alpha_;
    Permutation beta_;
    Permutation gamma_;
};

/// [C_alpha, C_beta, C_gamma] with explicit fixed points.
struct Passport {
    std::array<CycleType, 3> entries;

    /// "[2^1 1^2, 2^2, 4^1]"
    std::string to_string() const;
    /// Parses the to_string form; commas separate entries.
    static Passport parse(const std::string &text);

    friend bool operator==(const Passport &, const Passport &) = default;
    friend auto operator<=>(const Passport &, const Passport &) = default;
};

struct Signature {
    std::size_t black = 0;
    std::size_t white = 0;
    std::size_t faces = 0;
    std::size_t genus = 0;

    friend bool operator==(const Signature &, const Signature &) = default;
};

Passport passport(const Dessin &d);

/// (B, W, F, g) with 2 - 2g = B + W + F - n.
Signature signature(const Dessin &d);

/// Genus implied by a passport on n edges; throws InputError when negative or
/// not an integer.
std::size_t genus_from_passport(const Passport &p, std::size_t n_edges);

struct GroupSummary {
    std::uint64_t order = 0;
    bool abelian = false;
    GroupFingerprint fingerprint;
    std::optional<std::string> name;
};

/// Order and invariants of <alpha, beta>; throws CapExceeded past `cap`
/// elements.
GroupSummary monodromy_group(const Dessin &d, std::size_t cap = PermutationGroup::kDefaultCap);

/// Lexicographically least relabeling of (alpha, beta) over all base points,
/// each relabeling numbering points in breadth-first order along alpha then
/// beta. Two transitive pairs are simultaneously conjugate iff their
/// canonical forms are equal.
std::vector<std::uint32_t> canonical_form(const Permutation &alpha, const Permutation &beta);
inline std::vector<std::uint32_t> canonical_form(const Dessin &d) { return canonical_form(d.alpha(), d.beta()); }

/// The canonical representative itself.
Dessin canonical_dessin(const Dessin &d);

/// Graphviz drawing: black and white vertices joined by labeled edges.
std::string to_dot(const Dessin &d);

}  // namespace dessins
