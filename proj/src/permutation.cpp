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

#include "dessins/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <fmt/format.h>

#include "dessins/error.hpp"

namespace dessins {

std::string format_cycle_type(const CycleType &type) {
    std::string out;
    for (const auto &[len, mult] : type) {
        if (!out.empty()) {
            out += ' ';
        }
        out += fmt::format("{}^{}", len, mult);
    }
    return out;
}

CycleType parse_cycle_type(const std::string &text) {
    CycleType out;
    std::string cleaned = text;
    std::replace(cleaned.begin(), cleaned.end(), '.', ' ');
    std::istringstream in(cleaned);
    std::string token;
    while (in >> token) {
        auto caret = token.find('^');
        try {
            if (caret == std::string::npos) {
                out.emplace_back(static_cast<unsigned>(std::stoul(token)), 1u);
            } else {
                out.emplace_back(static_cast<unsigned>(std::stoul(token.substr(0, caret))),
                                 static_cast<unsigned>(std::stoul(token.substr(caret + 1))));
            }
        } catch (const std::exception &) {
            throw InputError(fmt::format("bad cycle-type factor '{}' in '{}'", token, text));
        }
        if (out.back().first == 0 || out.back().second == 0) {
            throw InputError(fmt::format("bad cycle-type factor '{}' in '{}'", token, text));
        }
    }
    // merge and sort, longest first
    std::map<unsigned, unsigned, std::greater<>> merged;
    for (const auto &[len, mult] : out) {
        merged[len] += mult;
    }
    return {merged.begin(), merged.end()};
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
        if (v >= images_.size() || seen[v]) {
            throw InputError("permutation images do not form a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t degree) {
    std::vector<std::uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    Permutation p;
    p.images_ = std::move(img);
    return p;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>> &cycles) {
    std::vector<std::uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    std::vector<bool> used(degree, false);
    for (const auto &cycle : cycles) {
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            std::uint32_t a = cycle[k];
            if (a < 1 || a > degree) {
                throw InputError(fmt::format("cycle entry {} outside 1..{}", a, degree));
            }
            if (used[a - 1]) {
                throw InputError(fmt::format("point {} appears twice in cycle notation", a));
            }
            used[a - 1] = true;
            img[a - 1] = cycle[(k + 1) % cycle.size()] - 1;
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[images_[i]] = static_cast<std::uint32_t>(i);
    }
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles(bool include_fixed) const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        std::vector<std::uint32_t> cycle;
        for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            cycle.push_back(j);
        }
        if (cycle.size() > 1 || include_fixed) {
            out.push_back(std::move(cycle));
        }
    }
    return out;
}

CycleType Permutation::cycle_type() const {
    std::map<unsigned, unsigned, std::greater<>> counts;
    for (const auto &c : cycles(true)) {
        ++counts[static_cast<unsigned>(c.size())];
    }
    return {counts.begin(), counts.end()};
}

std::size_t Permutation::cycle_count() const { return cycles(true).size(); }

std::uint64_t Permutation::order() const {
    std::uint64_t result = 1;
    for (const auto &c : cycles(true)) {
        result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
    }
    return result;
}

Permutation Permutation::conjugate_by(const Permutation &c) const {
    if (c.degree() != degree()) {
        throw InputError("conjugate_by: degree mismatch");
    }
    std::vector<std::uint32_t> img(degree());
    for (std::size_t i = 0; i < degree(); ++i) {
        img[c(i)] = c(images_[i]);
    }
    Permutation p;
    p.images_ = std::move(img);
    return p;
}

std::string Permutation::to_cycle_string() const {
    std::string out;
    for (const auto &cycle : cycles(false)) {
        out += '(';
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            if (k) {
                out += ',';
            }
            out += std::to_string(cycle[k] + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation &a, const Permutation &b) {
    if (a.degree() != b.degree()) {
        throw InputError(fmt::format("cannot compose permutations of degree {} and {}", a.degree(), b.degree()));
    }
    std::vector<std::uint32_t> img(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) {
        img[i] = b.images_[a.images_[i]];
    }
    Permutation p;
    p.images_ = std::move(img);
    return p;
}

std::vector<std::vector<std::uint32_t>> orbits(std::size_t degree, std::span<const Permutation> gens) {
    std::vector<int> orbit_of(degree, -1);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t start = 0; start < degree; ++start) {
        if (orbit_of[start] >= 0) {
            continue;
        }
        int id = static_cast<int>(out.size());
        std::vector<std::uint32_t> members{start};
        orbit_of[start] = id;
        for (std::size_t k = 0; k < members.size(); ++k) {
            for (const auto &g : gens) {
                std::uint32_t img = g(members[k]);
                if (orbit_of[img] < 0) {
                    orbit_of[img] = id;
                    members.push_back(img);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::uint64_t order_of(std::span<const std::uint16_t> images) {
    std::uint64_t result = 1;
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = images[j]) {
            seen[j] = true;
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

}  // namespace dessins
