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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dessins/dessin.hpp"

namespace dessins {

/// a + b*sqrt(2) with rational a, b.
class QSqrt2 {
   public:
    QSqrt2() = default;
    QSqrt2(mpq_class a, mpq_class b = 0);
    QSqrt2(long a) : QSqrt2(mpq_class(a)) {}

    const mpq_class &a() const { return a_; }
    const mpq_class &b() const { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    QSqrt2 conjugate() const { return {a_, -b_}; }
    /// a^2 - 2 b^2
    mpq_class norm() const { return a_ * a_ - 2 * b_ * b_; }
    double to_double() const;
    /// "3/2", "-sqrt2", "1/2+3*sqrt2"
    std::string to_string() const;

    QSqrt2 operator-() const { return {-a_, -b_}; }
    friend QSqrt2 operator+(const QSqrt2 &x, const QSqrt2 &y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend QSqrt2 operator-(const QSqrt2 &x, const QSqrt2 &y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend QSqrt2 operator*(const QSqrt2 &x, const QSqrt2 &y) {
        return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    /// Throws InputError on division by zero.
    friend QSqrt2 operator/(const QSqrt2 &x, const QSqrt2 &y);
    friend bool operator==(const QSqrt2 &x, const QSqrt2 &y) { return x.a_ == y.a_ && x.b_ == y.b_; }

   private:
    void canonicalize();

    mpq_class a_;
    mpq_class b_;
};

/// Polynomial over Q(sqrt2), coefficients lowest degree first, no trailing
/// zeros. The zero polynomial has degree -1.
class Poly {
   public:
    Poly() = default;
    explicit Poly(std::vector<QSqrt2> coefficients);
    static Poly constant(const QSqrt2 &c) { return Poly({c}); }
    static Poly x() { return Poly({QSqrt2(0), QSqrt2(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<QSqrt2> &coefficients() const { return c_; }
    QSqrt2 coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : QSqrt2(); }
    QSqrt2 leading() const { return c_.empty() ? QSqrt2() : c_.back(); }

    Poly derivative() const;
    Poly monic() const;
    Poly conjugate() const;
    QSqrt2 evaluate(const QSqrt2 &x) const;
    std::complex<double> evaluate(std::complex<double> x) const;
    /// "x^4 - 2*x^2", coefficients in QSqrt2::to_string form.
    std::string to_string() const;

    friend Poly operator+(const Poly &p, const Poly &q);
    friend Poly operator-(const Poly &p, const Poly &q);
    friend Poly operator*(const Poly &p, const Poly &q);
    friend Poly operator*(const QSqrt2 &c, const Poly &p);
    friend bool operator==(const Poly &, const Poly &) = default;

   private:
    void trim();
    std::vector<QSqrt2> c_;
};

Poly pow(const Poly &p, unsigned k);
/// Quotient and remainder; throws InputError for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly &p, const Poly &d);
/// Exact division; throws InputError when d does not divide p.
Poly exact_divide(const Poly &p, const Poly &d);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly &p, const Poly &q);
/// p / gcd(p, p').
Poly square_free_part(const Poly &p);
/// Yun decomposition p = c * prod factors[i]^(i+1) with square-free, pairwise
/// coprime monic factors (some possibly 1).
std::vector<Poly> square_free_factors(const Poly &p);

/// Root multiplicities of p as a cycle type (longest first), with an extra
/// part of size `extra` when it is positive.
CycleType multiplicity_profile(const Poly &p, unsigned extra = 0);

/// f = p / q.
class BelyiCandidate {
   public:
    /// Rejects q = 0, a common factor of p and q, and constant f.
    BelyiCandidate(Poly p, Poly q);

    const Poly &numerator() const { return p_; }
    const Poly &denominator() const { return q_; }
    /// max(deg p, deg q)
    unsigned degree() const;
    BelyiCandidate conjugate() const { return {p_.conjugate(), q_.conjugate()}; }

    friend bool operator==(const BelyiCandidate &, const BelyiCandidate &) = default;

   private:
    Poly p_;
    Poly q_;
};

struct CriticalValueReport {
    bool ok = false;
    /// Monic factor of the numerator of f' whose roots are critical points
    /// with values outside {0, 1, infinity}; constant 1 on success.
    Poly witness;
    /// Set when infinity is a critical point with a value outside {0, 1}.
    std::optional<QSqrt2> value_at_infinity;
};

/// Exact check that f has no critical values besides 0, 1 and infinity.
CriticalValueReport critical_values_ok(const BelyiCandidate &f);

/// Ramification over 0 (black), 1 (white) and infinity (faces), including
/// the point at infinity of the source.
Passport passport_of(const BelyiCandidate &f);

/// Necessary condition only: equal passports.
bool matches_dessin(const BelyiCandidate &f, const Dessin &d);

/// Post-composition with the Moebius maps permuting {0, 1, infinity}:
/// 1 - f, 1/f, f/(f-1), 1/(1-f), (f-1)/f for k = 1..5, identity for k = 0.
BelyiCandidate permute_critical_values(const BelyiCandidate &f, unsigned k);
/// f((a x + b) / (c x + d)); throws InputError if ad - bc = 0.
BelyiCandidate precompose_mobius(const BelyiCandidate &f, const QSqrt2 &a, const QSqrt2 &b, const QSqrt2 &c,
                                 const QSqrt2 &d);

struct VertexRoot {
    std::complex<double> value;
    unsigned multiplicity = 1;
    /// Exact a + b sqrt2 when recognized and confirmed by substitution.
    std::optional<QSqrt2> exact;
};

struct VertexCoordinates {
    std::vector<VertexRoot> black;
    std::vector<VertexRoot> white;
    std::vector<VertexRoot> faces;
    /// Multiplicity of infinity in each fibre (0 when absent).
    unsigned black_at_infinity = 0;
    unsigned white_at_infinity = 0;
    unsigned faces_at_infinity = 0;
};

inline constexpr unsigned kCoordinatesMaxDegree = 12;
inline constexpr unsigned kRecognitionMaxDenominator = 12;

/// Roots of p, p - q and q from companion matrices polished by Newton steps;
/// real roots are matched against a + b sqrt2 with small denominators.
VertexCoordinates vertex_coordinates(const BelyiCandidate &f);

}  // namespace dessins
