#include "skein/scalar.hpp"

#include <utility>

namespace skein {

namespace {

// Puts num / den with gcd(num, den) = 1 into canonical form (den made
// monomial-free and positive).
void fix_units(Laurent& num, Laurent& den) {
    auto [mv, ms] = den.min_exponents();
    if (mv != 0 || ms != 0) {
        den = den.shifted(-mv, -ms);
        num = num.shifted(-mv, -ms);
    }
    if (den.leading().coeff < 0) {
        den = -den;
        num = -num;
    }
}

}  // namespace

Scalar Scalar::fraction(Laurent num, Laurent den) {
    if (den.is_zero()) throw DivisionByZero();
    Scalar r;
    if (num.is_zero()) return r;
    if (den.is_monomial()) {
        const Term m = den.leading();
        num = num.shifted(-m.ev, -m.es);
        Integer c = m.coeff;
        if (c < 0) {
            c = -c;
            num = -num;
        }
        Integer g = gcd(num.content(), c);
        if (g != 1) {
            num = num.divided_by_integer(g);
            c /= g;
        }
        r.num_ = std::move(num);
        if (c != 1) r.den_ = Laurent(c);
        return r;
    }
    fix_units(num, den);
    Laurent g = gcd(num, den);
    if (!g.is_one()) {
        num = *exact_quotient(num, g);
        den = *exact_quotient(den, g);
    }
    if (den.leading().coeff < 0) {
        den = -den;
        num = -num;
    }
    r.num_ = std::move(num);
    if (!den.is_one()) r.den_ = std::move(den);
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_zero() && o.den_.is_zero()) {
        num_ += o.num_;
        return *this;
    }
    if (o.den_.is_zero()) {
        num_ += o.num_ * den_;
        if (num_.is_zero()) den_ = Laurent();
        return *this;
    }
    if (den_.is_zero()) {
        Laurent n = num_ * o.den_ + o.num_;
        num_ = std::move(n);
        den_ = o.den_;
        if (num_.is_zero()) den_ = Laurent();
        return *this;
    }
    if (den_ == o.den_) return *this = fraction(num_ + o.num_, den_);
    Laurent g = gcd(den_, o.den_);
    if (g.is_one()) return *this = fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    Laurent d1 = *exact_quotient(den_, g);
    Laurent d2 = *exact_quotient(o.den_, g);
    return *this = fraction(num_ * d2 + o.num_ * d1, d1 * o.den_);
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Scalar r;
    if (a.den_.is_zero() && b.den_.is_zero()) {
        r.num_ = a.num_ * b.num_;
        return r;
    }
    // Cross-cancel; the inputs are already reduced.
    Laurent an = a.num_, ad = a.den(), bn = b.num_, bd = b.den();
    if (!bd.is_one()) {
        Laurent g = gcd(an, bd);
        if (!g.is_one()) {
            an = *exact_quotient(an, g);
            bd = *exact_quotient(bd, g);
        }
    }
    if (!ad.is_one()) {
        Laurent g = gcd(bn, ad);
        if (!g.is_one()) {
            bn = *exact_quotient(bn, g);
            ad = *exact_quotient(ad, g);
        }
    }
    r.num_ = an * bn;
    Laurent den = ad * bd;
    if (den.leading().coeff < 0) {
        den = -den;
        r.num_ = -r.num_;
    }
    if (!den.is_one()) r.den_ = std::move(den);
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero();
    Laurent num = den();
    Laurent den = num_;
    fix_units(num, den);
    Scalar r;
    r.num_ = std::move(num);
    if (!den.is_one()) r.den_ = std::move(den);
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

Scalar& Scalar::operator/=(const Scalar& o) { return *this = *this / o; }

Scalar Scalar::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    Scalar result(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

namespace sym {

Scalar v() { return Laurent::monomial(1, 0); }
Scalar s() { return Laurent::monomial(0, 1); }
Scalar z() { return Laurent::monomial(0, 1) - Laurent::monomial(0, -1); }
Scalar delta() {
    return Scalar::fraction(Laurent::monomial(-1, 0) - Laurent::monomial(1, 0),
                            Laurent::monomial(0, 1) - Laurent::monomial(0, -1));
}

}  // namespace sym

Scalar quantum_int(int n) {
    if (n < 1) throw std::invalid_argument("quantum integer requires n >= 1");
    std::vector<Term> terms;
    for (int k = 0; k < n; ++k) terms.push_back({0, n - 1 - 2 * k, 1});
    return Laurent::from_terms(std::move(terms));
}

Scalar mirror(const Scalar& a) { return Scalar::fraction(a.num().mirrored(), a.den().mirrored()); }

Rational eval_rational(const Scalar& a, const Rational& v0, const Rational& s0) {
    Rational d;
    Rational n;
    try {
        d = a.den().evaluate(v0, s0);
        n = a.num().evaluate(v0, s0);
    } catch (const std::domain_error&) {
        throw PoleError();
    }
    if (d == 0) throw PoleError();
    return n / d;
}

std::string to_string(const Scalar& a) {
    if (a.is_laurent()) return to_string(a.num());
    return "(" + to_string(a.num()) + ")/(" + to_string(a.den()) + ")";
}

namespace {

nlohmann::json terms_json(const Laurent& p) {
    auto arr = nlohmann::json::array();
    for (const auto& t : p.terms()) arr.push_back({t.ev, t.es, t.coeff.get_str()});
    return arr;
}

Laurent terms_from_json(const nlohmann::json& j) {
    std::vector<Term> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("malformed Laurent term");
        terms.push_back({t[0].get<int>(), t[1].get<int>(), Integer(t[2].get<std::string>())});
    }
    return Laurent::from_terms(std::move(terms));
}

}  // namespace

nlohmann::json to_json(const Scalar& a) {
    return {{"num", terms_json(a.num())}, {"den", terms_json(a.den())}};
}

Scalar scalar_from_json(const nlohmann::json& j) {
    return Scalar::fraction(terms_from_json(j.at("num")), terms_from_json(j.at("den")));
}

}  // namespace skein
