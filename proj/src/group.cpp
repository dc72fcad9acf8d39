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

#include "dessins/group.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include <fmt/format.h>

#include "dessins/error.hpp"

namespace dessins {

std::string format_fingerprint(const GroupFingerprint &fp) {
    std::string out = fmt::format("order {} {{", fp.order);
    bool first = true;
    for (const auto &[ord, count] : fp.element_orders) {
        out += fmt::format("{}{}:{}", first ? "" : ", ", ord, count);
        first = false;
    }
    return out + "}";
}

namespace {

struct FlatHash {
    const std::vector<std::uint16_t> *data;
    std::size_t degree;
    std::size_t operator()(std::size_t idx) const {
        std::uint64_t h = 1469598103934665603ull;
        const std::uint16_t *p = data->data() + idx * degree;
        for (std::size_t i = 0; i < degree; ++i) {
            h = (h ^ p[i]) * 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

struct FlatEq {
    const std::vector<std::uint16_t> *data;
    std::size_t degree;
    bool operator()(std::size_t a, std::size_t b) const {
        const std::uint16_t *pa = data->data() + a * degree;
        const std::uint16_t *pb = data->data() + b * degree;
        return std::equal(pa, pa + degree, pb);
    }
};

}  // namespace

PermutationGroup::PermutationGroup(std::vector<Permutation> generators, std::size_t cap)
    : generators_(std::move(generators)) {
    if (generators_.empty()) {
        throw InputError("permutation group needs at least one generator");
    }
    degree_ = generators_.front().degree();
    if (degree_ == 0 || degree_ > std::numeric_limits<std::uint16_t>::max()) {
        throw InputError(fmt::format("group closure supports degree 1..65535, got {}", degree_));
    }
    for (const auto &g : generators_) {
        if (g.degree() != degree_) {
            throw InputError("generators have different degrees");
        }
    }
    for (std::size_t i = 0; i < degree_; ++i) {
        elements_.push_back(static_cast<std::uint16_t>(i));
    }
    std::unordered_set<std::size_t, FlatHash, FlatEq> seen(64, FlatHash{&elements_, degree_},
                                                           FlatEq{&elements_, degree_});
    seen.insert(0);
    std::size_t count = 1;
    for (std::size_t head = 0; head < count; ++head) {
        for (const auto &gen : generators_) {
            // append head * gen (head applied first), then keep it if new
            std::size_t base = elements_.size();
            elements_.resize(base + degree_);
            for (std::size_t i = 0; i < degree_; ++i) {
                elements_[base + i] = static_cast<std::uint16_t>(gen(elements_[head * degree_ + i]));
            }
            if (seen.insert(count).second) {
                ++count;
                if (count > cap) {
                    throw CapExceeded(fmt::format("group order exceeds the cap of {} elements", cap));
                }
            } else {
                elements_.resize(base);
            }
        }
    }
    elements_.shrink_to_fit();
    orders_.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        orders_[i] = order_of(element(i));
    }
}

bool PermutationGroup::is_abelian() const {
    for (std::size_t a = 0; a < generators_.size(); ++a) {
        for (std::size_t b = a + 1; b < generators_.size(); ++b) {
            if (generators_[a] * generators_[b] != generators_[b] * generators_[a]) {
                return false;
            }
        }
    }
    return true;
}

GroupFingerprint PermutationGroup::fingerprint() const {
    GroupFingerprint fp;
    fp.order = order();
    for (auto o : orders_) {
        ++fp.element_orders[o];
    }
    return fp;
}

namespace {

Permutation perm(std::size_t degree, std::vector<std::vector<std::uint32_t>> cycles) {
    return Permutation::from_cycles(degree, cycles);
}

struct NamedFingerprint {
    std::string name;
    GroupFingerprint fp;
};

std::vector<NamedFingerprint> build_table() {
    std::vector<NamedFingerprint> table;
    auto add = [&](std::string name, std::vector<Permutation> gens) {
        table.push_back({std::move(name), PermutationGroup(std::move(gens)).fingerprint()});
    };
    for (std::size_t n = 3; n <= 7; ++n) {
        std::vector<std::uint32_t> cycle(n);
        std::iota(cycle.begin(), cycle.end(), 1u);
        add(fmt::format("S{}", n), {perm(n, {{1, 2}}), perm(n, {cycle})});
    }
    for (std::size_t n = 4; n <= 7; ++n) {
        // 3-cycles (1,2,k) generate A_n
        std::vector<Permutation> gens;
        for (std::uint32_t k = 3; k <= n; ++k) {
            gens.push_back(perm(n, {{1, 2, k}}));
        }
        add(fmt::format("A{}", n), std::move(gens));
    }
    add("Z3^2:Z2^2", {perm(6, {{1, 2, 3}}), perm(6, {{1, 2}}), perm(6, {{4, 5, 6}}), perm(6, {{4, 5}})});
    add("S3 wr S3", {perm(9, {{1, 2, 3}}), perm(9, {{1, 2}}), perm(9, {{1, 4, 7}, {2, 5, 8}, {3, 6, 9}}),
                     perm(9, {{1, 4}, {2, 5}, {3, 6}})});
    return table;
}

GroupFingerprint dihedral_fingerprint(std::uint64_t m) {
    GroupFingerprint fp;
    fp.order = 2 * m;
    for (std::uint64_t k = 0; k < m; ++k) {
        ++fp.element_orders[m / std::gcd(k, m)];
    }
    fp.element_orders[2] += m;
    return fp;
}

}  // namespace

namespace {

// One level of a base and strong generating set: the generators fixing the
// earlier base points, and a transversal u[x] with base^u[x] = x.
struct StabilizerLevel {
    std::uint32_t base = 0;
    std::vector<Permutation> gens;
    std::vector<std::optional<Permutation>> transversal;
    std::vector<std::uint32_t> orbit;

    void rebuild(std::size_t degree) {
        transversal.assign(degree, std::nullopt);
        transversal[base] = Permutation::identity(degree);
        orbit = {base};
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            for (const auto &s : gens) {
                std::uint32_t y = s(orbit[k]);
                if (!transversal[y]) {
                    transversal[y] = *transversal[orbit[k]] * s;
                    orbit.push_back(y);
                }
            }
        }
    }
};

class SchreierSims {
   public:
    SchreierSims(std::span<const Permutation> generators) : degree_(generators.front().degree()) {
        for (const auto &g : generators) {
            if (g.is_identity()) {
                continue;
            }
            if (std::none_of(levels_.begin(), levels_.end(), [&](const auto &l) { return g(l.base) != l.base; })) {
                add_level(g);
            }
            for (auto &l : levels_) {
                l.gens.push_back(g);
                if (g(l.base) != l.base) {
                    break;
                }
            }
        }
        for (auto &l : levels_) {
            l.rebuild(degree_);
        }
        complete();
    }

    std::uint64_t order() const {
        std::uint64_t total = 1;
        for (const auto &l : levels_) {
            if (__builtin_mul_overflow(total, l.orbit.size(), &total)) {
                throw CapExceeded("group order does not fit in 64 bits");
            }
        }
        return total;
    }

   private:
    void add_level(const Permutation &moving) {
        StabilizerLevel l;
        for (std::uint32_t x = 0; x < degree_; ++x) {
            if (moving(x) != x) {
                l.base = x;
                break;
            }
        }
        levels_.push_back(std::move(l));
    }

    // Strips g through levels from `start`; returns the residue and the
    // level where stripping stopped.
    std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start) const {
        for (std::size_t j = start; j < levels_.size(); ++j) {
            const auto &u = levels_[j].transversal[g(levels_[j].base)];
            if (!u) {
                return {std::move(g), j};
            }
            g = g * u->inverse();
        }
        return {std::move(g), levels_.size()};
    }

    void complete() {
        std::size_t i = levels_.size();
        while (i > 0) {
            const std::size_t level = i - 1;
            bool extended = false;
            for (std::size_t k = 0; k < levels_[level].orbit.size() && !extended; ++k) {
                std::uint32_t x = levels_[level].orbit[k];
                for (std::size_t s = 0; s < levels_[level].gens.size() && !extended; ++s) {
                    const auto &gen = levels_[level].gens[s];
                    Permutation schreier = *levels_[level].transversal[x] * gen *
                                           levels_[level].transversal[gen(x)]->inverse();
                    auto [residue, j] = sift(std::move(schreier), level + 1);
                    if (residue.is_identity()) {
                        continue;
                    }
                    if (j == levels_.size()) {
                        add_level(residue);
                    }
                    for (std::size_t l = level + 1; l <= j; ++l) {
                        levels_[l].gens.push_back(residue);
                        levels_[l].rebuild(degree_);
                    }
                    i = j + 1;
                    extended = true;
                }
            }
            if (!extended) {
                --i;
            }
        }
    }

    std::size_t degree_;
    std::vector<StabilizerLevel> levels_;
};

}  // namespace

std::uint64_t group_order(std::span<const Permutation> generators) {
    if (generators.empty()) {
        throw InputError("group_order needs at least one generator");
    }
    for (const auto &g : generators) {
        if (g.degree() != generators.front().degree()) {
            throw InputError("generators have different degrees");
        }
    }
    return SchreierSims(generators).order();
}

std::optional<std::string> identify_group(const GroupFingerprint &fp, bool abelian) {
    if (fp.order == 0) {
        return std::nullopt;
    }
    if (fp.element_orders.count(fp.order)) {
        return fmt::format("Z{}", fp.order);
    }
    if (abelian) {
        return std::nullopt;
    }
    if (fp.order % 2 == 0 && fp.order >= 6 && dihedral_fingerprint(fp.order / 2) == fp) {
        return fmt::format("D{}", fp.order / 2);
    }
    static const std::vector<NamedFingerprint> table = build_table();
    for (const auto &entry : table) {
        if (entry.fp == fp) {
            return entry.name;
        }
    }
    return std::nullopt;
}

}  // namespace dessins
