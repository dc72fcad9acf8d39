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

#include "dessins/contextuality.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include <fmt/format.h>

#include "dessins/error.hpp"
#include "dessins/parallel.hpp"

namespace dessins {

int line_sign(std::span<const PauliOperator> line) {
    if (line.empty()) {
        throw InputError("line_sign: empty line");
    }
    for (std::size_t i = 0; i < line.size(); ++i) {
        for (std::size_t j = i + 1; j < line.size(); ++j) {
            if (!commutes(line[i], line[j])) {
                throw InputError(fmt::format("line_sign: {} and {} do not commute", format_pauli(line[i]),
                                             format_pauli(line[j])));
            }
        }
    }
    PauliOperator product = PauliOperator::identity(line.front().n_qubits());
    for (const auto &op : line) {
        product = multiply(product, op);
    }
    if (!product.is_identity_up_to_phase()) {
        throw InputError(fmt::format("line_sign: product {} is not proportional to the identity", format_pauli(product)));
    }
    if (product.phase_exponent() % 2 != 0) {
        throw InputError("line_sign: product is proportional to +-i times the identity");
    }
    return product.phase_exponent() == 0 ? 1 : -1;
}

MagicConfiguration::MagicConfiguration(std::vector<PauliOperator> observables,
                                       std::vector<std::vector<std::size_t>> lines)
    : observables_(std::move(observables)), lines_(std::move(lines)) {
    if (observables_.empty()) {
        throw InputError("configuration has no observables");
    }
    unsigned n = observables_.front().n_qubits();
    for (std::size_t i = 0; i < observables_.size(); ++i) {
        const auto &op = observables_[i];
        if (op.n_qubits() != n) {
            throw InputError(fmt::format("observable {} has {} qubits, expected {}", i, op.n_qubits(), n));
        }
        if (op.label_phase() != 0) {
            throw InputError(fmt::format("observable {} ({}) must be given without sign or phase", i, format_pauli(op)));
        }
        if (op.is_identity_up_to_phase()) {
            throw InputError(fmt::format("observable {} is the identity", i));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (observables_[j] == op) {
                throw InputError(fmt::format("observable {} repeats observable {} ({})", i, j, format_pauli(op)));
            }
        }
    }
    std::vector<bool> used(observables_.size(), false);
    signs_.reserve(lines_.size());
    for (std::size_t l = 0; l < lines_.size(); ++l) {
        const auto &line = lines_[l];
        if (line.empty()) {
            throw InputError(fmt::format("line {} is empty", l));
        }
        for (std::size_t a = 0; a < line.size(); ++a) {
            if (line[a] >= observables_.size()) {
                throw InputError(fmt::format("line {} references observable {} out of range", l, line[a]));
            }
            for (std::size_t b = 0; b < a; ++b) {
                if (line[a] == line[b]) {
                    throw InputError(fmt::format("line {} repeats observable {}", l, line[a]));
                }
            }
            used[line[a]] = true;
        }
        auto ops = line_operators(l);
        try {
            signs_.push_back(line_sign(ops));
        } catch (const InputError &e) {
            throw InputError(fmt::format("line {}: {}", l, e.what()));
        }
    }
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (!used[i]) {
            throw InputError(fmt::format("observable {} ({}) lies on no line", i, format_pauli(observables_[i])));
        }
    }
}

std::vector<PauliOperator> MagicConfiguration::line_operators(std::size_t line) const {
    std::vector<PauliOperator> ops;
    ops.reserve(lines_.at(line).size());
    for (std::size_t idx : lines_[line]) {
        ops.push_back(observables_[idx]);
    }
    return ops;
}

MagicCertificate is_magic(const MagicConfiguration &config) {
    MagicCertificate cert;
    cert.occurrences.assign(config.observables().size(), 0);
    for (const auto &line : config.lines()) {
        for (std::size_t idx : line) {
            ++cert.occurrences[idx];
        }
    }
    cert.all_occurrences_even =
        std::all_of(cert.occurrences.begin(), cert.occurrences.end(), [](std::size_t c) { return c % 2 == 0; });
    for (int s : config.line_signs()) {
        cert.sign_product *= s;
        cert.negative_lines += s < 0 ? 1 : 0;
    }
    cert.magic = cert.all_occurrences_even && cert.sign_product == -1;
    return cert;
}

bool ChshQuadruple::satisfies_square(const std::array<PauliOperator, 4> &s) {
    unsigned n = s[0].n_qubits();
    for (const auto &op : s) {
        if (op.n_qubits() != n) {
            return false;
        }
    }
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (s[i].x_mask() == s[j].x_mask() && s[i].z_mask() == s[j].z_mask()) {
                return false;
            }
        }
    }
    return commutes(s[0], s[1]) && commutes(s[1], s[2]) && commutes(s[2], s[3]) && commutes(s[3], s[0]) &&
           !commutes(s[0], s[2]) && !commutes(s[1], s[3]);
}

ChshQuadruple::ChshQuadruple(std::array<PauliOperator, 4> sigma) : sigma_(std::move(sigma)) {
    if (!satisfies_square(sigma_)) {
        throw InputError(fmt::format("({}, {}, {}, {}) is not a square: consecutive observables must commute and "
                                     "diagonal ones anticommute",
                                     format_pauli(sigma_[0]), format_pauli(sigma_[1]), format_pauli(sigma_[2]),
                                     format_pauli(sigma_[3])));
    }
}

ComplexMatrix chsh_operator(const std::array<PauliOperator, 4> &s) {
    unsigned n = s[0].n_qubits();
    for (const auto &op : s) {
        if (op.n_qubits() != n) {
            throw InputError("chsh: qubit count mismatch");
        }
    }
    if (n > kChshMaxQubits) {
        throw InputError(fmt::format("chsh: at most {} qubits supported, got {}", kChshMaxQubits, n));
    }
    std::array<ComplexMatrix, 4> m;
    for (std::size_t i = 0; i < 4; ++i) {
        m[i] = dense_matrix(s[i]);
    }
    return m[0] * m[1] + m[1] * m[2] + m[2] * m[3] - m[3] * m[0];
}

double chsh_operator_norm(const std::array<PauliOperator, 4> &sigma) {
    ComplexMatrix c = chsh_operator(sigma);
    Eigen::JacobiSVD<ComplexMatrix> svd(c);
    return svd.singularValues()(0);
}

double chsh_norm(const ChshQuadruple &q) { return chsh_operator_norm(q.sigma()); }

namespace {

// Commutation bitsets over the observable list; bit j of row i is set iff
// observables i != j commute. Requires at most 64 observables.
std::vector<std::uint64_t> commutation_rows(const std::vector<PauliOperator> &obs) {
    std::vector<std::uint64_t> rows(obs.size(), 0);
    for (std::size_t i = 0; i < obs.size(); ++i) {
        for (std::size_t j = 0; j < obs.size(); ++j) {
            if (i != j && commutes(obs[i], obs[j])) {
                rows[i] |= std::uint64_t{1} << j;
            }
        }
    }
    return rows;
}

std::uint64_t above(std::size_t i) { return i >= 63 ? 0 : ~std::uint64_t{0} << (i + 1); }

template <typename Fn>
void for_each_bit(std::uint64_t bits, Fn &&fn) {
    while (bits) {
        fn(static_cast<std::size_t>(__builtin_ctzll(bits)));
        bits &= bits - 1;
    }
}

}  // namespace

SquareCensus census_squares(unsigned n_qubits, unsigned threads, bool keep_list) {
    if (n_qubits < 1 || n_qubits > 3) {
        throw InputError(fmt::format("square census supports 1..3 qubits, got {}", n_qubits));
    }
    const auto obs = enumerate_observables(n_qubits);
    const auto comm = commutation_rows(obs);
    struct Found {
        std::array<std::size_t, 4> cyclic;
    };
    std::vector<std::vector<Found>> per_root(obs.size());
    std::vector<std::size_t> counts(obs.size(), 0);
    // Every square is found once: from its smallest element u and the
    // opposite corner w on u's diagonal.
    parallel_for(obs.size(), threads, [&](std::size_t u, unsigned) {
        std::uint64_t anti = ~comm[u] & above(u);
        if (obs.size() < 64) {
            anti &= (std::uint64_t{1} << obs.size()) - 1;
        }
        for_each_bit(anti, [&](std::size_t w) {
            std::uint64_t common = comm[u] & comm[w] & above(u);
            for_each_bit(common, [&](std::size_t c) {
                std::uint64_t partners = common & above(c) & ~comm[c];
                for_each_bit(partners, [&](std::size_t d) {
                    ++counts[u];
                    if (keep_list) {
                        per_root[u].push_back({{u, c, w, d}});
                    }
                });
            });
        });
    });
    SquareCensus census;
    for (auto c : counts) {
        census.count += c;
    }
    if (keep_list) {
        std::vector<std::pair<std::array<std::size_t, 4>, std::array<std::size_t, 4>>> keyed;
        keyed.reserve(census.count);
        for (const auto &bucket : per_root) {
            for (const auto &f : bucket) {
                auto key = f.cyclic;
                std::sort(key.begin(), key.end());
                keyed.emplace_back(key, f.cyclic);
            }
        }
        std::sort(keyed.begin(), keyed.end());
        census.squares.reserve(keyed.size());
        for (const auto &[key, cyc] : keyed) {
            census.squares.emplace_back(std::array<PauliOperator, 4>{obs[cyc[0]], obs[cyc[1]], obs[cyc[2]], obs[cyc[3]]});
        }
    }
    return census;
}

namespace {

struct PentagramSearch {
    std::vector<std::uint64_t> line_points;
    std::vector<std::vector<std::uint64_t>> meets_once;  // bitset over lines
    std::size_t words = 0;

    void run(std::size_t first, std::vector<std::array<std::size_t, 5>> &out) const {
        std::array<std::size_t, 5> chosen{};
        chosen[0] = first;
        std::vector<std::uint64_t> cand(words, 0);
        for (std::size_t w = 0; w < words; ++w) {
            cand[w] = meets_once[first][w];
        }
        clear_upto(cand, first);
        recurse(1, chosen, line_points[first], 0, cand, out);
    }

    static void clear_upto(std::vector<std::uint64_t> &bits, std::size_t idx) {
        std::size_t word = idx / 64;
        for (std::size_t w = 0; w < word; ++w) {
            bits[w] = 0;
        }
        std::size_t off = idx % 64;
        bits[word] &= off == 63 ? 0 : ~std::uint64_t{0} << (off + 1);
    }

    void recurse(std::size_t depth, std::array<std::size_t, 5> &chosen, std::uint64_t covered, std::uint64_t twice,
                 const std::vector<std::uint64_t> &cand, std::vector<std::array<std::size_t, 5>> &out) const {
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                std::size_t j = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
                bits &= bits - 1;
                std::uint64_t pts = line_points[j];
                // no observable may lie on three lines
                if (pts & twice) {
                    continue;
                }
                chosen[depth] = j;
                if (depth == 4) {
                    out.push_back(chosen);
                    continue;
                }
                std::vector<std::uint64_t> next(words);
                bool any = false;
                for (std::size_t v = 0; v < words; ++v) {
                    next[v] = cand[v] & meets_once[j][v];
                    any |= next[v] != 0;
                }
                if (!any) {
                    continue;
                }
                clear_upto(next, j);
                recurse(depth + 1, chosen, covered | pts, twice | (pts & covered), next, out);
            }
        }
    }
};

}  // namespace

PentagramCensus census_pentagrams(unsigned threads, bool keep_list) {
    constexpr unsigned n = 3;
    const auto obs = enumerate_observables(n);
    const auto comm = commutation_rows(obs);
    auto index_of = [](std::uint64_t x, std::uint64_t z) { return static_cast<std::size_t>((x << n) + z - 1); };

    PentagramSearch search;
    std::vector<std::array<std::size_t, 4>> lines;
    for (std::size_t a = 0; a < obs.size(); ++a) {
        for_each_bit(comm[a] & above(a), [&](std::size_t b) {
            for_each_bit(comm[a] & comm[b] & above(b), [&](std::size_t c) {
                std::uint64_t x = obs[a].x_mask() ^ obs[b].x_mask() ^ obs[c].x_mask();
                std::uint64_t z = obs[a].z_mask() ^ obs[b].z_mask() ^ obs[c].z_mask();
                if (x == 0 && z == 0) {
                    return;
                }
                std::size_t d = index_of(x, z);
                if (d > c) {
                    lines.push_back({a, b, c, d});
                }
            });
        });
    }
    search.words = (lines.size() + 63) / 64;
    for (const auto &l : lines) {
        std::uint64_t mask = 0;
        for (auto p : l) {
            mask |= std::uint64_t{1} << p;
        }
        search.line_points.push_back(mask);
    }
    search.meets_once.assign(lines.size(), std::vector<std::uint64_t>(search.words, 0));
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = 0; j < lines.size(); ++j) {
            if (__builtin_popcountll(search.line_points[i] & search.line_points[j]) == 1) {
                search.meets_once[i][j / 64] |= std::uint64_t{1} << (j % 64);
            }
        }
    }

    std::vector<std::vector<std::array<std::size_t, 5>>> found(lines.size());
    parallel_for(lines.size(), threads, [&](std::size_t i, unsigned) { search.run(i, found[i]); });

    PentagramCensus census;
    census.candidate_lines = lines.size();
    std::vector<std::pair<std::vector<std::size_t>, MagicConfiguration>> keyed;
    for (const auto &bucket : found) {
        for (const auto &five : bucket) {
            ++census.configurations;
            std::uint64_t covered = 0;
            for (auto l : five) {
                covered |= search.line_points[l];
            }
            std::vector<std::size_t> points;
            for_each_bit(covered, [&](std::size_t p) { points.push_back(p); });
            std::vector<PauliOperator> ops;
            for (auto p : points) {
                ops.push_back(obs[p]);
            }
            std::vector<std::vector<std::size_t>> local_lines;
            for (auto l : five) {
                std::vector<std::size_t> local;
                for (auto p : lines[l]) {
                    local.push_back(static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), p) - points.begin()));
                }
                local_lines.push_back(std::move(local));
            }
            std::sort(local_lines.begin(), local_lines.end());
            MagicConfiguration config(std::move(ops), std::move(local_lines));
            auto cert = is_magic(config);
            if (!cert.magic) {
                continue;
            }
            ++census.count;
            ++census.negative_line_histogram[cert.negative_lines];
            if (keep_list) {
                keyed.emplace_back(std::move(points), std::move(config));
            }
        }
    }
    if (keep_list) {
        std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
        census.pentagrams.reserve(keyed.size());
        for (auto &entry : keyed) {
            census.pentagrams.push_back(std::move(entry.second));
        }
    }
    return census;
}

std::vector<ChshQuadruple> embedded_squares(const MagicConfiguration &grid) {
    const auto &lines = grid.lines();
    if (grid.observables().size() != 9 || lines.size() != 6 ||
        std::any_of(lines.begin(), lines.end(), [](const auto &l) { return l.size() != 3; })) {
        throw InputError("embedded_squares: expected 9 observables on 6 lines of 3");
    }
    auto meet = [&](std::size_t a, std::size_t b) {
        std::vector<std::size_t> common;
        for (auto p : lines[a]) {
            if (std::find(lines[b].begin(), lines[b].end(), p) != lines[b].end()) {
                common.push_back(p);
            }
        }
        return common;
    };
    std::vector<std::size_t> rows{0};
    std::vector<std::size_t> cols;
    for (std::size_t l = 1; l < 6; ++l) {
        (meet(0, l).empty() ? rows : cols).push_back(l);
    }
    if (rows.size() != 3 || cols.size() != 3) {
        throw InputError("embedded_squares: lines do not split into three rows and three columns");
    }
    std::array<std::array<std::size_t, 3>, 3> cell{};
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            auto common = meet(rows[r], cols[c]);
            if (common.size() != 1) {
                throw InputError("embedded_squares: every row must meet every column in exactly one observable");
            }
            cell[r][c] = common.front();
        }
        for (std::size_t s = r + 1; s < 3; ++s) {
            if (!meet(rows[r], rows[s]).empty() || !meet(cols[r], cols[s]).empty()) {
                throw InputError("embedded_squares: rows (and columns) must be pairwise disjoint");
            }
        }
    }
    const auto &obs = grid.observables();
    std::vector<ChshQuadruple> out;
    for (std::size_t r1 = 0; r1 < 3; ++r1) {
        for (std::size_t r2 = r1 + 1; r2 < 3; ++r2) {
            for (std::size_t c1 = 0; c1 < 3; ++c1) {
                for (std::size_t c2 = c1 + 1; c2 < 3; ++c2) {
                    out.emplace_back(std::array<PauliOperator, 4>{obs[cell[r1][c1]], obs[cell[r1][c2]],
                                                                 obs[cell[r2][c2]], obs[cell[r2][c1]]});
                }
            }
        }
    }
    return out;
}

}  // namespace dessins
