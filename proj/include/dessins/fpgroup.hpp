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
#include <string_view>
#include <vector>

#include "dessins/dessin.hpp"
#include "dessins/permutation.hpp"

namespace dessins {

/// A word in the generators: +(g + 1) stands for generator g, -(g + 1) for
/// its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word &w);
Word invert(const Word &w);

/// Finite presentation <generators | relators>.
///
/// Text form:
///
///     gens: r0, r1; rels: r1^2, (r0*r1)^4
///
/// A relator is a product of factors joined by '*'; a factor is a generator
/// name or a parenthesized word, optionally raised to an integer power
/// (negative powers invert). "lhs = rhs" is read as lhs * rhs^-1, and "1" is
/// the empty word.
class FinitePresentation {
   public:
    FinitePresentation(std::vector<std::string> generators, std::vector<Word> relators);

    static FinitePresentation parse(std::string_view text);
    /// <r0, r1 | r1^2>: the cartographic group with r2 = (r0 r1)^-1 eliminated.
    static FinitePresentation cartographic();

    const std::vector<std::string> &generators() const { return generators_; }
    const std::vector<Word> &relators() const { return relators_; }
    std::size_t generator_count() const { return generators_.size(); }

    /// Parses a word over this presentation's generator names.
    Word parse_word(std::string_view text) const;
    std::string format_word(const Word &w) const;
    std::string to_string() const;

   private:
    std::vector<std::string> generators_;
    std::vector<Word> relators_;
};

/// A closed coset table. Column 2g holds the action of generator g, column
/// 2g + 1 that of its inverse; coset 0 is the subgroup itself.
class CosetTable {
   public:
    CosetTable(std::size_t generator_count, std::vector<std::uint32_t> entries);

    std::size_t index() const { return width_ == 0 ? 0 : entries_.size() / width_; }
    std::size_t generator_count() const { return width_ / 2; }
    std::uint32_t image(std::size_t coset, std::size_t column) const { return entries_[coset * width_ + column]; }
    /// Right action of generator g on cosets.
    Permutation action(std::size_t generator) const;
    /// Coset reached from `coset` by reading `w` left to right.
    std::uint32_t trace(std::uint32_t coset, const Word &w) const;
    const std::vector<std::uint32_t> &entries() const { return entries_; }

    friend bool operator==(const CosetTable &, const CosetTable &) = default;

   private:
    std::size_t width_ = 0;
    std::vector<std::uint32_t> entries_;
};

/// True iff every relator fixes every coset, inverse columns agree with the
/// forward ones, and every subgroup word fixes coset 0.
bool verify_table(const FinitePresentation &p, const CosetTable &t, const std::vector<Word> &subgroup = {});

struct CosetEnumerationStats {
    std::size_t defined = 0;
    std::size_t coincidences = 0;
};

/// Todd-Coxeter coset enumeration (HLT: relators traced from each live coset
/// in turn, coincidences merged with union-find). `max_cosets` bounds the
/// number of cosets defined in total; reaching it throws CapExceeded.
CosetTable coset_enumerate(const FinitePresentation &p, const std::vector<Word> &subgroup, std::size_t max_cosets,
                           CosetEnumerationStats *stats = nullptr);

struct LowIndexOptions {
    std::size_t index_cap = 16;
    /// Lift index_cap.
    bool unbounded = false;
    unsigned threads = 0;
};

/// One coset table per conjugacy class of subgroups of index <= max_index,
/// sorted by (index, entries). Each table is the least of its class in the
/// row-major order of its entries.
std::vector<CosetTable> low_index_subgroups(const FinitePresentation &p, std::size_t max_index,
                                            const LowIndexOptions &options = {});

/// alpha = action of `black_generator`, beta = action of `white_generator`.
Dessin dessin_from_table(const CosetTable &t, std::size_t black_generator = 0, std::size_t white_generator = 1);

struct DessinFilter {
    std::optional<CycleType> black;
    std::optional<CycleType> white;
    std::optional<CycleType> faces;
    std::optional<std::uint64_t> group_order;

    bool empty() const { return !black && !white && !faces && !group_order; }
};

inline constexpr std::size_t kDirectUnfilteredMax = 8;
inline constexpr std::size_t kDirectFilteredMax = 11;

/// All clean dessins with n edges up to simultaneous conjugation, found by
/// brute force over alpha with beta fixed to one involution per cycle type.
/// Returned in canonical form, sorted. Larger n needs a filter.
std::vector<Dessin> enumerate_dessins_direct(std::size_t n_edges, const DessinFilter &filter = {});

}  // namespace dessins
