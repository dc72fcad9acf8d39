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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace dessins {

/// Cycle structure as (cycle length, multiplicity) pairs, longest cycles
/// first. Fixed points are listed explicitly as length-1 cycles.
using CycleType = std::vector<std::pair<unsigned, unsigned>>;

/// "6^1 3^1"
std::string format_cycle_type(const CycleType &type);
/// Parses "2^4 1^2"; factors are separated by spaces or '.'.
CycleType parse_cycle_type(const std::string &text);

/// A bijection of {0, ..., n-1}. Products compose left to right:
/// (a * b)(i) = b(a(i)), so a is applied first.
class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> images);

    static Permutation identity(std::size_t degree);
    /// Builds from 1-based cycles; points not mentioned are fixed.
    static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>> &cycles_one_based);

    std::size_t degree() const { return images_.size(); }
    std::uint32_t operator()(std::size_t i) const { return images_[i]; }
    std::span<const std::uint32_t> images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;
    /// Cycles on 0-based points, each starting at its least point, ordered by
    /// least point; fixed points included when requested.
    std::vector<std::vector<std::uint32_t>> cycles(bool include_fixed = true) const;
    CycleType cycle_type() const;
    std::size_t cycle_count() const;
    std::uint64_t order() const;
    /// c^-1 * this * c, i.e. the permutation i -> c(this(c^-1(i))).
    Permutation conjugate_by(const Permutation &c) const;

    /// "(1,2,4,8,7,3)(5,9,6)" with 1-based labels, "()" for the identity.
    std::string to_cycle_string() const;

    friend Permutation operator*(const Permutation &a, const Permutation &b);
    friend bool operator==(const Permutation &, const Permutation &) = default;
    friend auto operator<=>(const Permutation &, const Permutation &) = default;

   private:
    std::vector<std::uint32_t> images_;
};

/// Orbits of the group generated by `gens` on {0..n-1}, each sorted, ordered
/// by least element.
std::vector<std::vector<std::uint32_t>> orbits(std::size_t degree, std::span<const Permutation> gens);

std::uint64_t order_of(std::span<const std::uint16_t> images);

}  // namespace dessins
