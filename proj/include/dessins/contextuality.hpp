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
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "dessins/pauli.hpp"

namespace dessins {

/// Sign of the product of a set of pairwise commuting observables whose
/// product is proportional to the identity. Returns +1 or -1.
///
/// Throws InputError naming the first anticommuting pair, or when the product
/// is not +-identity.
int line_sign(std::span<const PauliOperator> line);

/// Observables (phase-free, distinct) arranged in lines of mutually commuting
/// operators. Line signs are computed and validated at construction.
class MagicConfiguration {
   public:
    MagicConfiguration(std::vector<PauliOperator> observables, std::vector<std::vector<std::size_t>> lines);

    const std::vector<PauliOperator> &observables() const { return observables_; }
    const std::vector<std::vector<std::size_t>> &lines() const { return lines_; }
    const std::vector<int> &line_signs() const { return signs_; }
    unsigned n_qubits() const { return observables_.front().n_qubits(); }

    std::vector<PauliOperator> line_operators(std::size_t line) const;

   private:
    std::vector<PauliOperator> observables_;
    std::vector<std::vector<std::size_t>> lines_;
    std::vector<int> signs_;
};

struct MagicCertificate {
    bool magic = false;
    /// Number of lines through each observable.
    std::vector<std::size_t> occurrences;
    bool all_occurrences_even = false;
    int sign_product = 1;
    std::size_t negative_lines = 0;
};

/// A configuration is magic (a parity proof of contextuality) iff every
/// observable lies on an even number of lines and the line signs multiply to -1.
MagicCertificate is_magic(const MagicConfiguration &config);

/// Four observables on a square: consecutive ones commute, the two diagonal
/// pairs (s1, s3) and (s2, s4) anticommute.
class ChshQuadruple {
   public:
    explicit ChshQuadruple(std::array<PauliOperator, 4> sigma);

    const std::array<PauliOperator, 4> &sigma() const { return sigma_; }
    const PauliOperator &operator[](std::size_t i) const { return sigma_[i]; }

    static bool satisfies_square(const std::array<PauliOperator, 4> &sigma);

   private:
    std::array<PauliOperator, 4> sigma_;
};

inline constexpr unsigned kChshMaxQubits = 3;

/// Dense matrix of C = s1 s2 + s2 s3 + s3 s4 - s4 s1 without checking the
/// square geometry.
ComplexMatrix chsh_operator(const std::array<PauliOperator, 4> &sigma);

/// Largest singular value of chsh_operator(sigma); no geometry check.
double chsh_operator_norm(const std::array<PauliOperator, 4> &sigma);

/// Operator norm of C for a valid square (n <= 3 qubits).
double chsh_norm(const ChshQuadruple &q);

struct SquareCensus {
    std::size_t count = 0;
    /// Cyclically labeled squares, sorted by their (sorted) observable lists.
    std::vector<ChshQuadruple> squares;
};

/// All unordered 4-sets of distinct n-qubit observables that admit a square
/// labeling. n in {1, 2, 3}; the count does not depend on `threads`
/// (0 = all cores).
SquareCensus census_squares(unsigned n_qubits, unsigned threads = 0, bool keep_list = true);

struct PentagramCensus {
    std::size_t count = 0;
    /// Number of five-line configurations found before the magic filter.
    std::size_t configurations = 0;
    /// Number of candidate lines (4 commuting observables with product +-III).
    std::size_t candidate_lines = 0;
    /// Histogram: number of -III lines -> number of pentagrams.
    std::map<std::size_t, std::size_t> negative_line_histogram;
    std::vector<MagicConfiguration> pentagrams;
};

/// All magic Mermin pentagrams of three-qubit observables: 10 observables on
/// 5 lines of 4, every observable on exactly two lines, any two lines meeting
/// in exactly one observable.
PentagramCensus census_pentagrams(unsigned threads = 0, bool keep_list = true);

/// The nine 2x2 sub-squares of a 3x3 grid configuration (three rows, three
/// columns). Rows are the lines of the parallel class containing line 0, in
/// input order; squares are emitted for row pairs (r1 < r2) then column pairs
/// (c1 < c2) as (r1c1, r1c2, r2c2, r2c1).
std::vector<ChshQuadruple> embedded_squares(const MagicConfiguration &grid);

}  // namespace dessins
