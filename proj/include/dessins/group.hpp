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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dessins/permutation.hpp"

namespace dessins {

/// Isomorphism-invariant summary used in place of an isomorphism test:
/// group order plus the histogram of element orders.
struct GroupFingerprint {
    std::uint64_t order = 0;
    std::map<std::uint64_t, std::uint64_t> element_orders;

    friend bool operator==(const GroupFingerprint &, const GroupFingerprint &) = default;
    friend auto operator<=>(const GroupFingerprint &, const GroupFingerprint &) = default;
};

/// "order 36 {1:1, 2:15, 3:8, 6:12}"
std::string format_fingerprint(const GroupFingerprint &fp);

/// Explicit element list of a permutation group, built by breadth-first
/// closure over the generators.
class PermutationGroup {
   public:
    static constexpr std::size_t kDefaultCap = 10'000'000;

    /// Throws CapExceeded once more than `cap` elements have been found.
    explicit PermutationGroup(std::vector<Permutation> generators, std::size_t cap = kDefaultCap);

    std::size_t degree() const { return degree_; }
    std::size_t order() const { return orders_.size(); }
    const std::vector<Permutation> &generators() const { return generators_; }

    /// Images of element i; element 0 is the identity.
    std::span<const std::uint16_t> element(std::size_t i) const {
        return {elements_.data() + i * degree_, degree_};
    }
    std::uint64_t element_order(std::size_t i) const { return orders_[i]; }

    bool is_abelian() const;
    GroupFingerprint fingerprint() const;

   private:
    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<std::uint16_t> elements_;
    std::vector<std::uint64_t> orders_;
};

/// Order of <generators> by Schreier-Sims, without listing elements.
/// Throws CapExceeded if the order does not fit in 64 bits.
std::uint64_t group_order(std::span<const Permutation> generators);

/// Best-effort name for a fingerprint: cyclic "Z<n>", dihedral "D<m>"
/// (order 2m), and a small table (A4, A5, S3..S7, S3xS3 written Z3^2:Z2^2,
/// S3 wr S3). Fingerprint equality is not an isomorphism proof.
std::optional<std::string> identify_group(const GroupFingerprint &fp, bool abelian);

}  // namespace dessins
