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

#include "dessins/dessin.hpp"

#include <algorithm>
#include <sstream>

#include <fmt/format.h>

#include "dessins/error.hpp"

namespace dessins {

Dessin Dessin::make(Permutation alpha, Permutation beta) {
    if (alpha.degree() != beta.degree()) {
        throw InputError(fmt::format("alpha has degree {} but beta has degree {}", alpha.degree(), beta.degree()));
    }
    if (alpha.degree() == 0) {
        throw InputError("a dessin needs at least one edge");
    }
    std::vector<Permutation> gens{alpha, beta};
    auto orbs = orbits(alpha.degree(), gens);
    if (orbs.size() != 1) {
        std::string parts;
        for (const auto &orb : orbs) {
            parts += '{';
            for (std::size_t k = 0; k < orb.size(); ++k) {
                parts += (k ? "," : "") + std::to_string(orb[k] + 1);
            }
            parts += '}';
        }
        throw InputError(fmt::format("permutations are not transitive (disconnected dessin): {} orbits {}", orbs.size(),
                                     parts));
    }
    Permutation gamma = (alpha * beta).inverse();
    return Dessin(std::move(alpha), std::move(beta), std::move(gamma));
}

bool Dessin::is_clean() const { return (beta_ * beta_).is_identity(); }

std::string Passport::to_string() const {
    return fmt::format("[{}, {}, {}]", format_cycle_type(entries[0]), format_cycle_type(entries[1]),
                       format_cycle_type(entries[2]));
}

Passport Passport::parse(const std::string &text) {
    std::string body = text;
    body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '[' || c == ']'; }), body.end());
    std::vector<std::string> parts;
    std::stringstream in(body);
    std::string part;
    while (std::getline(in, part, ',')) {
        parts.push_back(part);
    }
    if (parts.size() != 3) {
        throw InputError(fmt::format("passport '{}' must have three comma-separated entries", text));
    }
    Passport p;
    for (std::size_t i = 0; i < 3; ++i) {
        p.entries[i] = parse_cycle_type(parts[i]);
    }
    return p;
}

Passport passport(const Dessin &d) { return Passport{{d.alpha().cycle_type(), d.beta().cycle_type(), d.gamma().cycle_type()}}; }

namespace {

std::size_t cycles_in(const CycleType &t) {
    std::size_t total = 0;
    for (const auto &[len, mult] : t) {
        total += mult;
    }
    return total;
}

}  // namespace

std::size_t genus_from_passport(const Passport &p, std::size_t n_edges) {
    for (const auto &entry : p.entries) {
        std::size_t sum = 0;
        for (const auto &[len, mult] : entry) {
            sum += static_cast<std::size_t>(len) * mult;
        }
        if (sum != n_edges) {
            throw InputError(fmt::format("passport entry {} sums to {}, expected {}", format_cycle_type(entry), sum, n_edges));
        }
    }
    long long euler = static_cast<long long>(cycles_in(p.entries[0]) + cycles_in(p.entries[1]) + cycles_in(p.entries[2])) -
                      static_cast<long long>(n_edges);
    long long twice_genus = 2 - euler;
    if (twice_genus < 0 || twice_genus % 2 != 0) {
        throw InputError(fmt::format("B+W+F-n = {} gives no valid genus", euler));
    }
    return static_cast<std::size_t>(twice_genus / 2);
}

Signature signature(const Dessin &d) {
    Signature s;
    s.black = d.alpha().cycle_count();
    s.white = d.beta().cycle_count();
    s.faces = d.gamma().cycle_count();
    s.genus = genus_from_passport(passport(d), d.n_edges());
    return s;
}

GroupSummary monodromy_group(const Dessin &d, std::size_t cap) {
    PermutationGroup group({d.alpha(), d.beta()}, cap);
    GroupSummary summary;
    summary.order = group.order();
    summary.abelian = group.is_abelian();
    summary.fingerprint = group.fingerprint();
    summary.name = identify_group(summary.fingerprint, summary.abelian);
    return summary;
}

namespace {

// Relabeling of (alpha, beta) in breadth-first order from `base`, written as
// alpha images followed by beta images. Returns false (and leaves `out`
// partial) as soon as the encoding exceeds `best`.
bool relabel_from(const Permutation &alpha, const Permutation &beta, std::uint32_t base,
                  const std::vector<std::uint32_t> *best, std::vector<std::uint32_t> &out) {
    const std::size_t n = alpha.degree();
    constexpr std::uint32_t kUnset = ~0u;
    std::vector<std::uint32_t> label(n, kUnset);
    std::vector<std::uint32_t> order;
    order.reserve(n);
    label[base] = 0;
    order.push_back(base);
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (const Permutation *g : {&alpha, &beta}) {
            std::uint32_t img = (*g)(order[k]);
            if (label[img] == kUnset) {
                label[img] = static_cast<std::uint32_t>(order.size());
                order.push_back(img);
            }
        }
    }
    // interleaved encoding: for each new label k, (alpha image, beta image)
    out.assign(2 * n, 0);
    bool tied = best != nullptr;
    for (std::size_t k = 0; k < n; ++k) {
        std::uint32_t a = label[alpha(order[k])];
        std::uint32_t b = label[beta(order[k])];
        out[2 * k] = a;
        out[2 * k + 1] = b;
        if (tied) {
            for (std::size_t pos : {2 * k, 2 * k + 1}) {
                if (out[pos] != (*best)[pos]) {
                    if (out[pos] > (*best)[pos]) {
                        return false;
                    }
                    tied = false;
                    break;
                }
            }
        }
    }
    return true;
}

}  // namespace

std::vector<std::uint32_t> canonical_form(const Permutation &alpha, const Permutation &beta) {
    if (alpha.degree() != beta.degree()) {
        throw InputError("canonical_form: degree mismatch");
    }
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> scratch;
    for (std::uint32_t base = 0; base < alpha.degree(); ++base) {
        if (relabel_from(alpha, beta, base, best.empty() ? nullptr : &best, scratch)) {
            if (best.empty() || scratch < best) {
                best = scratch;
            }
        }
    }
    return best;
}

Dessin canonical_dessin(const Dessin &d) {
    auto form = canonical_form(d);
    std::size_t n = d.n_edges();
    std::vector<std::uint32_t> a(n), b(n);
    for (std::size_t k = 0; k < n; ++k) {
        a[k] = form[2 * k];
        b[k] = form[2 * k + 1];
    }
    return Dessin::make(Permutation(std::move(a)), Permutation(std::move(b)));
}

std::string to_dot(const Dessin &d) {
    std::string out = "graph dessin {\n";
    auto black = d.alpha().cycles(true);
    auto white = d.beta().cycles(true);
    std::vector<std::size_t> black_of(d.n_edges()), white_of(d.n_edges());
    for (std::size_t v = 0; v < black.size(); ++v) {
        out += fmt::format("  b{} [shape=circle, style=filled, fillcolor=black, label=\"\"];\n", v + 1);
        for (auto e : black[v]) {
            black_of[e] = v;
        }
    }
    for (std::size_t v = 0; v < white.size(); ++v) {
        out += fmt::format("  w{} [shape=circle, style=filled, fillcolor=white, label=\"\"];\n", v + 1);
        for (auto e : white[v]) {
            white_of[e] = v;
        }
    }
    for (std::size_t e = 0; e < d.n_edges(); ++e) {
        out += fmt::format("  b{} -- w{} [label=\"{}\"];\n", black_of[e] + 1, white_of[e] + 1, e + 1);
    }
    return out + "}\n";
}

}  // namespace dessins
