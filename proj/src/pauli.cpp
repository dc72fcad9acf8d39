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

#include "dessins/pauli.hpp"

#include <tuple>

#include <fmt/format.h>

#include "dessins/error.hpp"

namespace dessins {

namespace {

std::uint64_t low_bits(unsigned n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void require_same_size(const PauliOperator &a, const PauliOperator &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw InputError(fmt::format("qubit count mismatch: {} vs {}", a.n_qubits(), b.n_qubits()));
    }
}

}  // namespace

PauliOperator::PauliOperator(unsigned n_qubits, std::uint64_t x, std::uint64_t z, unsigned phase_exponent)
    : n_(n_qubits), x_(x), z_(z), phase_(phase_exponent & 3) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw InputError(fmt::format("qubit count must be in [1, {}], got {}", kMaxQubits, n_qubits));
    }
    if ((x | z) & ~low_bits(n_qubits)) {
        throw InputError("Pauli masks have bits beyond the qubit count");
    }
}

PauliOperator PauliOperator::identity(unsigned n_qubits) { return {n_qubits, 0, 0, 0}; }

PauliOperator PauliOperator::observable(unsigned n_qubits, std::uint64_t x, std::uint64_t z) {
    return {n_qubits, x, z, static_cast<unsigned>(__builtin_popcountll(x & z))};
}

unsigned PauliOperator::y_count() const { return static_cast<unsigned>(__builtin_popcountll(x_ & z_)); }

unsigned PauliOperator::label_phase() const { return (phase_ + 4 - (y_count() & 3)) & 3; }

std::string PauliOperator::to_string() const { return format_pauli(*this); }

PauliOperator parse_pauli(std::string_view text) {
    if (text.empty()) {
        throw InputError("empty Pauli string");
    }
    std::size_t pos = 0;
    unsigned prefix = 0;
    if (text[pos] == '+' || text[pos] == '-') {
        prefix = text[pos] == '-' ? 2 : 0;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        prefix += 1;
        ++pos;
    }
    std::size_t n = text.size() - pos;
    if (n == 0) {
        throw InputError(fmt::format("Pauli string '{}' has no operator characters (position {})", text, pos));
    }
    if (n > PauliOperator::kMaxQubits) {
        throw InputError(fmt::format("Pauli string '{}' exceeds {} qubits", text, PauliOperator::kMaxQubits));
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t bit = std::uint64_t{1} << (n - 1 - j);
        switch (text[pos + j]) {
            case 'I':
                break;
            case 'X':
                x |= bit;
                break;
            case 'Z':
                z |= bit;
                break;
            case 'Y':
                x |= bit;
                z |= bit;
                break;
            default:
                throw InputError(
                    fmt::format("invalid character '{}' at position {} in Pauli string '{}'", text[pos + j], pos + j, text));
        }
    }
    unsigned nq = static_cast<unsigned>(n);
    return {nq, x, z, prefix + static_cast<unsigned>(__builtin_popcountll(x & z))};
}

std::string format_pauli(const PauliOperator &op) {
    static constexpr const char *kPrefix[4] = {"", "i", "-", "-i"};
    std::string out = kPrefix[op.label_phase()];
    unsigned n = op.n_qubits();
    for (unsigned j = 0; j < n; ++j) {
        std::uint64_t bit = std::uint64_t{1} << (n - 1 - j);
        bool xb = op.x_mask() & bit;
        bool zb = op.z_mask() & bit;
        out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return out;
}

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b) {
    require_same_size(a, b);
    // X^xa Z^za X^xb Z^zb = (-1)^{za.xb} X^(xa^xb) Z^(za^zb)
    unsigned swaps = static_cast<unsigned>(__builtin_popcountll(a.z_mask() & b.x_mask()));
    return {a.n_qubits(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask(),
            a.phase_exponent() + b.phase_exponent() + 2 * swaps};
}

bool commutes(const PauliOperator &a, const PauliOperator &b) {
    require_same_size(a, b);
    return symplectic_commute(a.x_mask(), a.z_mask(), b.x_mask(), b.z_mask());
}

ComplexMatrix dense_matrix(const PauliOperator &op) {
    unsigned n = op.n_qubits();
    if (n > kDenseMaxQubits) {
        throw InputError(fmt::format("dense matrix limited to {} qubits, got {}", kDenseMaxQubits, n));
    }
    using C = std::complex<double>;
    ComplexMatrix result = ComplexMatrix::Identity(1, 1);
    for (unsigned j = 0; j < n; ++j) {
        std::uint64_t bit = std::uint64_t{1} << (n - 1 - j);
        // X^x Z^z for one qubit
        Eigen::Matrix2cd factor = Eigen::Matrix2cd::Identity();
        if (op.z_mask() & bit) {
            factor(1, 1) = C(-1, 0);
        }
        if (op.x_mask() & bit) {
            factor.row(0).swap(factor.row(1));
        }
        ComplexMatrix next(result.rows() * 2, result.cols() * 2);
        for (Eigen::Index r = 0; r < result.rows(); ++r) {
            for (Eigen::Index c = 0; c < result.cols(); ++c) {
                next.block<2, 2>(2 * r, 2 * c) = result(r, c) * factor;
            }
        }
        result = std::move(next);
    }
    static const C kPhase[4] = {C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
    return kPhase[op.phase_exponent()] * result;
}

std::vector<PauliOperator> enumerate_observables(unsigned n_qubits) {
    if (n_qubits < 1 || n_qubits > 4) {
        throw InputError(fmt::format("observable enumeration supports 1..4 qubits, got {}", n_qubits));
    }
    std::uint64_t size = std::uint64_t{1} << n_qubits;
    std::vector<PauliOperator> out;
    out.reserve(size * size - 1);
    for (std::uint64_t x = 0; x < size; ++x) {
        for (std::uint64_t z = 0; z < size; ++z) {
            if (x == 0 && z == 0) {
                continue;
            }
            out.push_back(PauliOperator::observable(n_qubits, x, z));
        }
    }
    return out;
}

bool canonical_less(const PauliOperator &a, const PauliOperator &b) {
    return std::tuple(a.n_qubits(), a.x_mask(), a.z_mask(), a.phase_exponent()) <
           std::tuple(b.n_qubits(), b.x_mask(), b.z_mask(), b.phase_exponent());
}

}  // namespace dessins
