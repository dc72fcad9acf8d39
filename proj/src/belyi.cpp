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

#include "dessins/belyi.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "dessins/error.hpp"

namespace dessins {

QSqrt2::QSqrt2(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) { canonicalize(); }

void QSqrt2::canonicalize() {
    a_.canonicalize();
    b_.canonicalize();
}

QSqrt2 operator/(const QSqrt2 &x, const QSqrt2 &y) {
    if (y.is_zero()) {
        throw InputError("division by zero in Q(sqrt2)");
    }
    mpq_class n = y.norm();
    QSqrt2 t = x * y.conjugate();
    return {t.a_ / n, t.b_ / n};
}

double QSqrt2::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

std::string QSqrt2::to_string() const {
    if (b_ == 0) {
        return a_.get_str();
    }
    std::string root;
    if (b_ == 1) {
        root = "sqrt2";
    } else if (b_ == -1) {
        root = "-sqrt2";
    } else {
        root = b_.get_str() + "*sqrt2";
    }
    if (a_ == 0) {
        return root;
    }
    return a_.get_str() + (b_ > 0 ? "+" : "") + root;
}

Poly::Poly(std::vector<QSqrt2> coefficients) : c_(std::move(coefficients)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

Poly Poly::derivative() const {
    std::vector<QSqrt2> d;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        d.push_back(QSqrt2(static_cast<long>(i)) * c_[i]);
    }
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (c_.empty()) {
        return *this;
    }
    std::vector<QSqrt2> out;
    for (const auto &x : c_) {
        out.push_back(x / c_.back());
    }
    return Poly(std::move(out));
}

Poly Poly::conjugate() const {
    std::vector<QSqrt2> out;
    for (const auto &x : c_) {
        out.push_back(x.conjugate());
    }
    return Poly(std::move(out));
}

QSqrt2 Poly::evaluate(const QSqrt2 &x) const {
    QSqrt2 acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::complex<double> Poly::evaluate(std::complex<double> x) const {
    std::complex<double> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + it->to_double();
    }
    return acc;
}

std::string Poly::to_string() const {
    if (c_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const auto &c = c_[k];
        if (c.is_zero()) {
            continue;
        }
        std::string coeff = c.to_string();
        bool negative = coeff[0] == '-';
        bool compound = !c.is_rational() && c.a() != 0;
        if (negative && !compound) {
            coeff.erase(0, 1);
        }
        if (compound) {
            coeff = "(" + coeff + ")";
            negative = false;
        }
        if (!out.empty()) {
            out += negative ? " - " : " + ";
        } else if (negative) {
            out += "-";
        }
        std::string power = k == 0 ? "" : (k == 1 ? "x" : fmt::format("x^{}", k));
        if (k == 0) {
            out += coeff;
        } else if (coeff == "1") {
            out += power;
        } else {
            out += coeff + "*" + power;
        }
    }
    return out;
}

Poly operator+(const Poly &p, const Poly &q) {
    std::vector<QSqrt2> out(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = p.coefficient(i) + q.coefficient(i);
    }
    return Poly(std::move(out));
}

Poly operator-(const Poly &p, const Poly &q) {
    std::vector<QSqrt2> out(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = p.coefficient(i) - q.coefficient(i);
    }
    return Poly(std::move(out));
}

Poly operator*(const Poly &p, const Poly &q) {
    if (p.is_zero() || q.is_zero()) {
        return Poly();
    }
    std::vector<QSqrt2> out(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
        for (std::size_t j = 0; j < q.c_.size(); ++j) {
            out[i + j] = out[i + j] + p.c_[i] * q.c_[j];
        }
    }
    return Poly(std::move(out));
}

Poly operator*(const QSqrt2 &c, const Poly &p) { return Poly::constant(c) * p; }

Poly pow(const Poly &p, unsigned k) {
    Poly out = Poly::constant(1);
    for (unsigned i = 0; i < k; ++i) {
        out = out * p;
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly &p, const Poly &d) {
    if (d.is_zero()) {
        throw InputError("polynomial division by zero");
    }
    std::vector<QSqrt2> rem = p.coefficients();
    const int dd = d.degree();
    if (p.degree() < dd) {
        return {Poly(), p};
    }
    std::vector<QSqrt2> quot(static_cast<std::size_t>(p.degree() - dd + 1));
    const QSqrt2 lead = d.leading();
    for (int k = p.degree() - dd; k >= 0; --k) {
        QSqrt2 factor = rem[static_cast<std::size_t>(k + dd)] / lead;
        quot[static_cast<std::size_t>(k)] = factor;
        if (factor.is_zero()) {
            continue;
        }
        for (int i = 0; i <= dd; ++i) {
            auto &slot = rem[static_cast<std::size_t>(k + i)];
            slot = slot - factor * d.coefficients()[static_cast<std::size_t>(i)];
        }
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_divide(const Poly &p, const Poly &d) {
    auto [q, r] = divmod(p, d);
    if (!r.is_zero()) {
        throw InputError(fmt::format("{} does not divide {}", d.to_string(), p.to_string()));
    }
    return q;
}

Poly gcd(const Poly &p, const Poly &q) {
    Poly a = p, b = q;
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly square_free_part(const Poly &p) {
    if (p.degree() <= 0) {
        return p;
    }
    return exact_divide(p, gcd(p, p.derivative()));
}

std::vector<Poly> square_free_factors(const Poly &p) {
    std::vector<Poly> out;
    if (p.degree() <= 0) {
        return out;
    }
    Poly f = p.monic();
    Poly a0 = gcd(f, f.derivative());
    Poly b = exact_divide(f, a0);
    Poly c = exact_divide(f.derivative(), a0);
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        Poly a = gcd(b, d);
        out.push_back(a);
        b = exact_divide(b, a);
        c = exact_divide(d, a);
        d = c - b.derivative();
    }
    return out;
}

CycleType multiplicity_profile(const Poly &p, unsigned extra) {
    std::map<unsigned, unsigned, std::greater<>> parts;
    auto factors = square_free_factors(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() > 0) {
            parts[static_cast<unsigned>(i + 1)] += static_cast<unsigned>(factors[i].degree());
        }
    }
    if (extra > 0) {
        parts[extra] += 1;
    }
    return CycleType(parts.begin(), parts.end());
}

BelyiCandidate::BelyiCandidate(Poly p, Poly q) : p_(std::move(p)), q_(std::move(q)) {
    if (q_.is_zero()) {
        throw InputError("denominator is zero");
    }
    if (p_.is_zero() || (p_.degree() == 0 && q_.degree() == 0)) {
        throw InputError("constant function");
    }
    if (gcd(p_, q_).degree() > 0) {
        throw InputError(fmt::format("numerator and denominator share the factor {}", gcd(p_, q_).to_string()));
    }
}

unsigned BelyiCandidate::degree() const { return static_cast<unsigned>(std::max(p_.degree(), q_.degree())); }

CriticalValueReport critical_values_ok(const BelyiCandidate &f) {
    const Poly &p = f.numerator();
    const Poly &q = f.denominator();
    CriticalValueReport report;
    Poly n = p.derivative() * q - p * q.derivative();
    if (n.is_zero()) {
        throw InputError("degenerate candidate: f is constant");
    }
    // Critical points over 0, 1 or infinity are roots of p (p - q) q; strip
    // them from the numerator of f' until nothing shared remains.
    const Poly fibres = p * (p - q) * q;
    for (;;) {
        Poly g = gcd(n, fibres);
        if (g.degree() <= 0) {
            break;
        }
        n = exact_divide(n, g);
    }
    report.witness = n.monic();
    report.ok = n.degree() == 0;

    if (p.degree() == q.degree()) {
        QSqrt2 c = p.leading() / q.leading();
        if (!(c == QSqrt2(1))) {
            int ramification = static_cast<int>(f.degree()) - (p - c * q).degree();
            if (ramification > 1) {
                report.ok = false;
                report.value_at_infinity = c;
            }
        }
    }
    return report;
}

Passport passport_of(const BelyiCandidate &f) {
    const unsigned n = f.degree();
    auto at_infinity = [n](const Poly &poly) { return n - static_cast<unsigned>(std::max(poly.degree(), 0)); };
    const Poly &p = f.numerator();
    const Poly &q = f.denominator();
    Poly white = p - q;
    return Passport{{multiplicity_profile(p, at_infinity(p)), multiplicity_profile(white, at_infinity(white)),
                     multiplicity_profile(q, at_infinity(q))}};
}

bool matches_dessin(const BelyiCandidate &f, const Dessin &d) { return passport_of(f) == passport(d); }

BelyiCandidate permute_critical_values(const BelyiCandidate &f, unsigned k) {
    const Poly &p = f.numerator();
    const Poly &q = f.denominator();
    switch (k) {
        case 0:
            return f;
        case 1:
            return {q - p, q};
        case 2:
            return {q, p};
        case 3:
            return {p, p - q};
        case 4:
            return {q, q - p};
        case 5:
            return {p - q, p};
        default:
            throw InputError(fmt::format("no Moebius map number {}", k));
    }
}

BelyiCandidate precompose_mobius(const BelyiCandidate &f, const QSqrt2 &a, const QSqrt2 &b, const QSqrt2 &c,
                                 const QSqrt2 &d) {
    if ((a * d - b * c).is_zero()) {
        throw InputError("degenerate Moebius map");
    }
    const unsigned n = f.degree();
    const Poly top({b, a});
    const Poly bottom({d, c});
    auto homogenize = [&](const Poly &poly) {
        Poly out;
        for (std::size_t i = 0; i < poly.coefficients().size(); ++i) {
            out = out + poly.coefficients()[i] * (pow(top, static_cast<unsigned>(i)) *
                                                  pow(bottom, n - static_cast<unsigned>(i)));
        }
        return out;
    };
    return {homogenize(f.numerator()), homogenize(f.denominator())};
}

namespace {

std::optional<QSqrt2> recognize(double x, const Poly &factor) {
    const double root2 = std::sqrt(2.0);
    const long bound = static_cast<long>(kRecognitionMaxDenominator);
    for (long d = 1; d <= bound; ++d) {
        for (long step = 0; step <= 2 * bound * d; ++step) {
            // k = 0, 1, -1, 2, -2, ...
            long k = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
            if (step > 0 && std::gcd(std::labs(k), d) != 1) {
                continue;
            }
            if (step == 0 && d > 1) {
                continue;
            }
            double a = x - static_cast<double>(k) / static_cast<double>(d) * root2;
            for (long e = 1; e <= bound; ++e) {
                double scaled = a * static_cast<double>(e);
                double nearest = std::round(scaled);
                if (std::abs(scaled - nearest) < 1e-9 * static_cast<double>(e)) {
                    QSqrt2 guess(mpq_class(static_cast<long>(nearest), e), mpq_class(k, d));
                    if (factor.evaluate(guess).is_zero()) {
                        return guess;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<VertexRoot> roots_of(const Poly &poly) {
    std::vector<VertexRoot> out;
    auto factors = square_free_factors(poly);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Poly &factor = factors[i];
        const int m = factor.degree();
        if (m <= 0) {
            continue;
        }
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
        for (int r = 1; r < m; ++r) {
            companion(r, r - 1) = 1.0;
        }
        for (int r = 0; r < m; ++r) {
            companion(r, m - 1) = -factor.coefficient(static_cast<std::size_t>(r)).to_double();
        }
        Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("companion eigenvalues did not converge");
        }
        const Poly derivative = factor.derivative();
        for (int r = 0; r < m; ++r) {
            std::complex<double> z = solver.eigenvalues()[r];
            double last_step = 0;
            for (int iter = 0; iter < 60; ++iter) {
                std::complex<double> slope = derivative.evaluate(z);
                if (std::abs(slope) == 0.0) {
                    break;
                }
                std::complex<double> step = factor.evaluate(z) / slope;
                z -= step;
                last_step = std::abs(step);
                if (last_step <= 1e-15 * std::max(1.0, std::abs(z))) {
                    break;
                }
            }
            if (last_step > 1e-12 * std::max(1.0, std::abs(z))) {
                throw std::runtime_error(fmt::format("root refinement did not converge for {}", factor.to_string()));
            }
            VertexRoot root;
            root.value = z;
            root.multiplicity = static_cast<unsigned>(i + 1);
            if (std::abs(z.imag()) < 1e-9 * std::max(1.0, std::abs(z.real()))) {
                root.exact = recognize(z.real(), factor);
                if (root.exact) {
                    root.value = {root.exact->to_double(), 0.0};
                }
            }
            out.push_back(root);
        }
    }
    std::sort(out.begin(), out.end(), [](const VertexRoot &x, const VertexRoot &y) {
        if (x.value.real() != y.value.real()) {
            return x.value.real() < y.value.real();
        }
        return x.value.imag() < y.value.imag();
    });
    return out;
}

}  // namespace

VertexCoordinates vertex_coordinates(const BelyiCandidate &f) {
    if (f.degree() > kCoordinatesMaxDegree) {
        throw InputError(fmt::format("vertex coordinates need degree <= {}", kCoordinatesMaxDegree));
    }
    const unsigned n = f.degree();
    auto at_infinity = [n](const Poly &poly) { return n - static_cast<unsigned>(std::max(poly.degree(), 0)); };
    Poly white = f.numerator() - f.denominator();
    VertexCoordinates out;
    out.black = roots_of(f.numerator());
    out.white = roots_of(white);
    out.faces = roots_of(f.denominator());
    out.black_at_infinity = at_infinity(f.numerator());
    out.white_at_infinity = at_infinity(white);
    out.faces_at_infinity = at_infinity(f.denominator());
    return out;
}

}  // namespace dessins
