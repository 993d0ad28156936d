#pragma once

// The coefficient field: rational functions in v and s with integer
// coefficients, kept in a canonical reduced form so that equality is
// structural.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "skein/laurent.hpp"

namespace skein {

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

class PoleError : public std::domain_error {
public:
    PoleError() : std::domain_error("denominator vanishes at the evaluation point") {}
};

/// num / den with
///  - den a polynomial in v, s that is not divisible by v or s,
///  - gcd(num, den) = 1 in the Laurent ring,
///  - the lexicographically greatest term of den positive.
/// Laurent polynomials therefore always have den = 1.
class Scalar {
public:
    Scalar() = default;
    Scalar(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    Scalar(Integer c) : num_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
    Scalar(Laurent p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)

    /// Reduces num / den to canonical form; throws DivisionByZero if den = 0.
    static Scalar fraction(Laurent num, Laurent den);
    static Scalar rational(long p, long q) { return fraction(Laurent(p), Laurent(q)); }

    const Laurent& num() const noexcept { return num_; }
    Laurent den() const { return den_.is_zero() ? Laurent(1) : den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return den_.is_zero() && num_.is_one(); }
    bool is_laurent() const noexcept { return den_.is_zero(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Multiplicative inverse; throws DivisionByZero on zero.
    Scalar inv() const;
    Scalar pow(int e) const;

private:
    Laurent num_;
    Laurent den_;  // empty means 1
};

namespace sym {

Scalar v();
Scalar s();
/// z = s - 1/s.
Scalar z();
/// The value of a null-homotopic loop, (1/v - v) / z.
Scalar delta();

}  // namespace sym

/// [n] = (s^n - s^-n) / (s - 1/s), for n >= 1.
Scalar quantum_int(int n);

/// v -> 1/v, s -> 1/s.  An involution.
Scalar mirror(const Scalar& a);

/// Exact value at (v0, s0); throws PoleError if the denominator vanishes there.
Rational eval_rational(const Scalar& a, const Rational& v0, const Rational& s0);

std::string to_string(const Scalar& a);

/// {"num": [[e_v, e_s, "coeff"], ...], "den": [...]}, terms in lex order.
nlohmann::json to_json(const Scalar& a);
Scalar scalar_from_json(const nlohmann::json& j);

}  // namespace skein
