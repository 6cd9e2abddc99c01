#pragma once

#include <string>
#include <vector>

#include "kform/errors.hpp"
#include "kform/numbers.hpp"

namespace kform {

// Euler totient, by trial-division factorization. Desk scale only.
long euler_phi(long n);

// The N-th cyclotomic polynomial Phi_N as its integer coefficient vector,
// constant term first. Monic of degree phi(N). Computed by exact division
// of x^N - 1 by the product of Phi_d over proper divisors d, and cached.
const std::vector<BigInt>& cyclotomic_polynomial(long n);

// An exact element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}
// reduced modulo Phi_N. Canonical form is unique, so equality is
// coefficient-wise after embedding into a common conductor. Immutable.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclotomic(const Rational& r) : conductor_(1), coeffs_(1, r) {}
    explicit Cyclotomic(const BigInt& n) : conductor_(1), coeffs_(1, Rational(n)) {}
    explicit Cyclotomic(long n) : conductor_(1), coeffs_(1, Rational(n)) {}

    // c * zeta_N^k, reduced.
    static Cyclotomic root_power(long conductor, long k, const Rational& c = Rational(1));

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    // Embedding into Q(zeta_L) via zeta_N = zeta_L^{L/N}; N must divide L.
    Cyclotomic embedded(long bigger_conductor) const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;

    // Image under zeta_N -> zeta_N^{N-1} (complex conjugation).
    Cyclotomic conjugate() const;

    bool is_zero() const;
    bool is_rational() const;
    // Throws NotAnInteger when the value is irrational or a proper fraction.
    Rational as_rational() const;
    BigInt as_integer() const;

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Rendering in the literal grammar consumed by table files, e.g.
    // "2", "-1/2", "z(4,1)", "1 - 2*z(8,3)".
    std::string to_string() const;

private:
    Cyclotomic(long conductor, std::vector<Rational> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {}

    // Reduce an arbitrary-degree polynomial in zeta_N modulo Phi_N.
    static Cyclotomic from_polynomial(long conductor, std::vector<Rational> poly);

    long conductor_;
    std::vector<Rational> coeffs_;  // length phi(conductor_)
};

// Parses the cyclotomic literal grammar: integers, rationals `p/q`, and
// terms `c*z(N,k)` combined with `+`/`-`. Whitespace insignificant.
Cyclotomic parse_cyclotomic_literal(const std::string& text);

}  // namespace kform
