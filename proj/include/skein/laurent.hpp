#pragma once

// Integer Laurent polynomials in the two variables v and s.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace skein {

using Integer = mpz_class;
using Rational = mpq_class;

/// A term c * v^ev * s^es.
struct Term {
    int ev = 0;
    int es = 0;
    Integer coeff;
};

/// Sparse element of Z[v^{+-1}, s^{+-1}].
///
/// Terms are kept sorted lexicographically by (ev, es), ascending, with no
/// zero coefficients; the zero polynomial has no terms.  The last term is
/// therefore the lexicographically greatest ("leading") term.
class Laurent {
public:
    Laurent() = default;
    Laurent(long c);  // NOLINT(google-explicit-constructor)
    Laurent(Integer c);  // NOLINT(google-explicit-constructor)

    static Laurent monomial(int ev, int es, Integer c = 1);
    /// Builds from arbitrary terms: sorts, merges equal exponents, drops zeros.
    static Laurent from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool is_constant() const noexcept;
    std::size_t size() const noexcept { return terms_.size(); }
    const Term& leading() const { return terms_.back(); }

    /// Smallest exponent of v and of s over all terms (independently).
    std::pair<int, int> min_exponents() const;
    /// True if every exponent is non-negative.
    bool is_polynomial() const;
    /// gcd of the integer coefficients (positive; 0 for the zero polynomial).
    Integer content() const;

    /// Multiplies by v^dv s^ds.
    Laurent shifted(int dv, int ds) const;
    /// v -> 1/v, s -> 1/s.
    Laurent mirrored() const;
    Laurent divided_by_integer(const Integer& d) const;  // exact

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    Laurent& operator*=(const Integer& c);

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend bool operator==(const Laurent& a, const Laurent& b);

    Rational evaluate(const Rational& v0, const Rational& s0) const;

private:
    std::vector<Term> terms_;
};

/// The polynomial gcd of a and b after stripping monomial content: the result
/// is a polynomial not divisible by v or s whose leading term is positive.
/// gcd(0, 0) is 0.
Laurent gcd(const Laurent& a, const Laurent& b);

/// Quotient a / b in the Laurent ring when b divides a exactly.
std::optional<Laurent> exact_quotient(const Laurent& a, const Laurent& b);

std::string to_string(const Laurent& p);

}  // namespace skein
