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

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace dessins {

/// An n-qubit Pauli operator i^k * X^x * Z^z in symplectic form.
///
/// Bit (n - 1 - j) of `x` and `z` describes the j-th tensor factor, so the
/// masks read left to right like the string label ("IX" has x = 0b01).
/// Y is stored as x = z = 1 with an extra factor of i (Y = iXZ), which makes
/// the label "Y" carry phase exponent 1 and "YY" phase exponent 2.
class PauliOperator {
   public:
    static constexpr unsigned kMaxQubits = 64;

    PauliOperator() = default;
    PauliOperator(unsigned n_qubits, std::uint64_t x, std::uint64_t z, unsigned phase_exponent = 0);

    static PauliOperator identity(unsigned n_qubits);
    /// Hermitian representative with the given masks: the operator whose label
    /// carries no sign or i prefix.
    static PauliOperator observable(unsigned n_qubits, std::uint64_t x, std::uint64_t z);

    unsigned n_qubits() const { return n_; }
    std::uint64_t x_mask() const { return x_; }
    std::uint64_t z_mask() const { return z_; }
    unsigned phase_exponent() const { return phase_; }

    bool is_identity_up_to_phase() const { return x_ == 0 && z_ == 0; }
    /// Number of Y factors.
    unsigned y_count() const;
    /// Phase relative to the bare label, in units of i: 0 for "XY", 2 for "-XY".
    unsigned label_phase() const;
    bool is_hermitian() const { return label_phase() % 2 == 0; }

    /// The phase-free observable with the same masks.
    PauliOperator without_phase() const { return observable(n_, x_, z_); }
    PauliOperator negated() const { return {n_, x_, z_, phase_ + 2}; }

    std::string to_string() const;

    friend bool operator==(const PauliOperator &, const PauliOperator &) = default;

   private:
    unsigned n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
    unsigned phase_ = 0;
};

/// Parses `["+"|"-"]["i"]{I|X|Y|Z}+`.
PauliOperator parse_pauli(std::string_view text);

std::string format_pauli(const PauliOperator &op);

/// Exact group product a * b.
PauliOperator multiply(const PauliOperator &a, const PauliOperator &b);

/// True iff the symplectic form x_a.z_b + z_a.x_b vanishes mod 2.
bool commutes(const PauliOperator &a, const PauliOperator &b);

/// Same test on raw masks.
inline bool symplectic_commute(std::uint64_t xa, std::uint64_t za, std::uint64_t xb, std::uint64_t zb) {
    return ((__builtin_popcountll(xa & zb) + __builtin_popcountll(za & xb)) & 1) == 0;
}

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr unsigned kDenseMaxQubits = 4;

/// Dense 2^n x 2^n matrix (Kronecker product, leftmost factor most significant).
ComplexMatrix dense_matrix(const PauliOperator &op);

/// All 4^n - 1 non-identity observables (phase-free), ordered
/// lexicographically on (x_mask, z_mask).
std::vector<PauliOperator> enumerate_observables(unsigned n_qubits);

/// Total order used for canonical output: (x_mask, z_mask), then phase.
bool canonical_less(const PauliOperator &a, const PauliOperator &b);

}  // namespace dessins
