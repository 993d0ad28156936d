#include "skein/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

namespace skein {

namespace {

// Order-preserving packing of an exponent pair.
constexpr std::int64_t kBias = std::int64_t{1} << 30;

std::uint64_t pack(int ev, int es) {
    return (static_cast<std::uint64_t>(ev + kBias) << 32) |
           static_cast<std::uint64_t>(es + kBias);
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z (index = degree in s).  Trimmed: the
// zero polynomial is empty and the last entry is nonzero.

using UPoly = std::vector<Integer>;

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

void uscale(UPoly& p, const Integer& c) {
    for (auto& x : p) x *= c;
    trim(p);
}

Integer ucontent(const UPoly& p) {
    Integer g = 0;
    for (const auto& x : p) {
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void udiv_integer(UPoly& p, const Integer& d) {
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

UPoly uprimitive(UPoly p) {
    trim(p);
    if (p.empty()) return p;
    Integer c = ucontent(p);
    if (p.back() < 0) c = -c;
    if (c != 1) udiv_integer(p, c);
    return p;
}

// a - c * x^shift * b, in place on a.
void usub_shifted(UPoly& a, const Integer& c, int shift, const UPoly& b) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift);
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= c * b[j];
    trim(a);
}

// Sparse pseudo-remainder of a by b (b nonzero).
UPoly uprem(UPoly a, const UPoly& b) {
    const Integer& lb = b.back();
    while (!a.empty() && deg(a) >= deg(b)) {
        Integer la = a.back();
        int shift = deg(a) - deg(b);
        uscale(a, lb);
        usub_shifted(a, la, shift, b);
    }
    return a;
}

std::optional<UPoly> uexact_div(UPoly a, const UPoly& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    trim(a);
    if (a.empty()) return UPoly{};
    if (deg(a) < deg(b)) return std::nullopt;
    UPoly q(deg(a) - deg(b) + 1);
    while (!a.empty()) {
        if (deg(a) < deg(b)) return std::nullopt;
        if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
        Integer c = a.back() / b.back();
        int shift = deg(a) - deg(b);
        q[shift] = c;
        usub_shifted(a, c, shift, b);
    }
    return q;
}

// gcd with positive leading coefficient.
UPoly ugcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    if (a.empty() && b.empty()) return {};
    if (a.empty() || b.empty()) {
        UPoly r = a.empty() ? b : a;
        if (r.back() < 0)
            for (auto& x : r) x = -x;
        return r;
    }
    Integer g = gcd(ucontent(a), ucontent(b));
    a = uprimitive(std::move(a));
    b = uprimitive(std::move(b));
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        if (deg(b) == 0) {
            a = UPoly{1};
            break;
        }
        UPoly r = uprem(std::move(a), b);
        a = std::move(b);
        b = uprimitive(std::move(r));
    }
    uscale(a, g);
    return a;
}

// ---------------------------------------------------------------------------
// Bivariate polynomials as polynomials in v with coefficients in Z[s].

using BPoly = std::vector<UPoly>;

void btrim(BPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

int bdeg(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly bcontent(const BPoly& p) {
    UPoly g;
    for (const auto& c : p) {
        if (c.empty()) continue;
        g = ugcd(g, c);
        if (g.size() == 1 && g[0] == 1) break;
    }
    return g;
}

BPoly bprimitive(BPoly p) {
    btrim(p);
    if (p.empty()) return p;
    UPoly c = bcontent(p);
    // Fix the sign so that the leading coefficient's leading entry is positive.
    if (p.back().back() < 0)
        for (auto& x : c) x = -x;
    if (!(c.size() == 1 && c[0] == 1)) {
        for (auto& x : p) {
            if (x.empty()) continue;
            x = *uexact_div(x, c);
        }
    }
    return p;
}

BPoly bprem(BPoly a, const BPoly& b) {
    const UPoly& lb = b.back();
    while (!a.empty() && bdeg(a) >= bdeg(b)) {
        UPoly la = a.back();
        int shift = bdeg(a) - bdeg(b);
        for (auto& c : a) c = umul(c, lb);
        for (std::size_t j = 0; j < b.size(); ++j) {
            UPoly t = umul(la, b[j]);
            UPoly& dst = a[j + shift];
            if (dst.size() < t.size()) dst.resize(t.size());
            for (std::size_t k = 0; k < t.size(); ++k) dst[k] -= t[k];
            trim(dst);
        }
        btrim(a);
    }
    return a;
}

BPoly bgcd(BPoly a, BPoly b) {
    btrim(a);
    btrim(b);
    UPoly g = ugcd(bcontent(a), bcontent(b));
    a = bprimitive(std::move(a));
    b = bprimitive(std::move(b));
    if (a.empty() || b.empty()) {
        BPoly r = a.empty() ? b : a;
        for (auto& c : r) c = umul(c, g);
        btrim(r);
        return r;
    }
    if (bdeg(a) < bdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        if (bdeg(b) == 0) {
            a = BPoly{UPoly{1}};
            break;
        }
        BPoly r = bprem(std::move(a), b);
        a = std::move(b);
        b = bprimitive(std::move(r));
    }
    for (auto& c : a) c = umul(c, g);
    btrim(a);
    return a;
}

// Expects a polynomial (non-negative exponents).
BPoly to_bpoly(const Laurent& p) {
    BPoly r;
    for (const auto& t : p.terms()) {
        if (static_cast<int>(r.size()) <= t.ev) r.resize(t.ev + 1);
        UPoly& c = r[t.ev];
        if (static_cast<int>(c.size()) <= t.es) c.resize(t.es + 1);
        c[t.es] = t.coeff;
    }
    return r;
}

Laurent from_bpoly(const BPoly& p) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != 0)
                terms.push_back({static_cast<int>(i), static_cast<int>(j), p[i][j]});
    return Laurent::from_terms(std::move(terms));
}

Laurent strip_monomial(const Laurent& p) {
    auto [mv, ms] = p.min_exponents();
    return p.shifted(-mv, -ms);
}

}  // namespace

Laurent::Laurent(long c) {
    if (c != 0) terms_.push_back({0, 0, Integer(c)});
}

Laurent::Laurent(Integer c) {
    if (c != 0) terms_.push_back({0, 0, std::move(c)});
}

Laurent Laurent::monomial(int ev, int es, Integer c) {
    Laurent r;
    if (c != 0) r.terms_.push_back({ev, es, std::move(c)});
    return r;
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return pack(a.ev, a.es) < pack(b.ev, b.es);
    });
    Laurent r;
    for (auto& t : terms) {
        if (!r.terms_.empty() && r.terms_.back().ev == t.ev && r.terms_.back().es == t.es) {
            r.terms_.back().coeff += t.coeff;
        } else {
            if (!r.terms_.empty() && r.terms_.back().coeff == 0) r.terms_.pop_back();
            r.terms_.push_back(std::move(t));
        }
    }
    if (!r.terms_.empty() && r.terms_.back().coeff == 0) r.terms_.pop_back();
    return r;
}

bool Laurent::is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].ev == 0 && terms_[0].es == 0 && terms_[0].coeff == 1;
}

bool Laurent::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].ev == 0 && terms_[0].es == 0);
}

std::pair<int, int> Laurent::min_exponents() const {
    if (terms_.empty()) return {0, 0};
    int mv = std::numeric_limits<int>::max();
    int ms = std::numeric_limits<int>::max();
    for (const auto& t : terms_) {
        mv = std::min(mv, t.ev);
        ms = std::min(ms, t.es);
    }
    return {mv, ms};
}

bool Laurent::is_polynomial() const {
    auto [mv, ms] = min_exponents();
    return mv >= 0 && ms >= 0;
}

Integer Laurent::content() const {
    Integer g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Laurent Laurent::shifted(int dv, int ds) const {
    Laurent r = *this;
    for (auto& t : r.terms_) {
        t.ev += dv;
        t.es += ds;
    }
    return r;
}

Laurent Laurent::mirrored() const {
    std::vector<Term> t = terms_;
    for (auto& x : t) {
        x.ev = -x.ev;
        x.es = -x.es;
    }
    std::reverse(t.begin(), t.end());  // lex order reverses under negation
    Laurent r;
    r.terms_ = std::move(t);
    return r;
}

Laurent Laurent::divided_by_integer(const Integer& d) const {
    Laurent r = *this;
    for (auto& t : r.terms_) {
        if (!mpz_divisible_p(t.coeff.get_mpz_t(), d.get_mpz_t()))
            throw std::domain_error("inexact integer division of Laurent polynomial");
        mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

template <bool Subtract>
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b) {
    std::vector<Term> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && pack(a[i].ev, a[i].es) < pack(b[j].ev, b[j].es))) {
            r.push_back(a[i++]);
        } else if (i == a.size() || pack(b[j].ev, b[j].es) < pack(a[i].ev, a[i].es)) {
            r.push_back(b[j]);
            if constexpr (Subtract) r.back().coeff = -r.back().coeff;
            ++j;
        } else {
            Integer c = Subtract ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
            if (c != 0) r.push_back({a[i].ev, a[i].es, std::move(c)});
            ++i;
            ++j;
        }
    }
    return r;
}

}  // namespace

Laurent& Laurent::operator+=(const Laurent& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge<false>(terms_, o.terms_);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge<true>(terms_, o.terms_);
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_monomial()) {
        const Term& m = b.terms_[0];
        Laurent r = a.shifted(m.ev, m.es);
        if (m.coeff != 1)
            for (auto& t : r.terms_) t.coeff *= m.coeff;
        return r;
    }
    if (a.is_monomial()) return b * a;
    std::vector<std::pair<std::uint64_t, Term>> prods;
    prods.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            Term t{x.ev + y.ev, x.es + y.es, x.coeff * y.coeff};
            prods.emplace_back(pack(t.ev, t.es), std::move(t));
        }
    std::sort(prods.begin(), prods.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    Laurent r;
    r.terms_.reserve(prods.size());
    std::uint64_t last = 0;
    for (auto& [key, t] : prods) {
        if (!r.terms_.empty() && key == last) {
            r.terms_.back().coeff += t.coeff;
        } else {
            if (!r.terms_.empty() && r.terms_.back().coeff == 0) r.terms_.pop_back();
            r.terms_.push_back(std::move(t));
            last = key;
        }
    }
    if (!r.terms_.empty() && r.terms_.back().coeff == 0) r.terms_.pop_back();
    return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent& Laurent::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

bool operator==(const Laurent& a, const Laurent& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const Term& x = a.terms_[i];
        const Term& y = b.terms_[i];
        if (x.ev != y.ev || x.es != y.es || x.coeff != y.coeff) return false;
    }
    return true;
}

Rational Laurent::evaluate(const Rational& v0, const Rational& s0) const {
    auto power = [](const Rational& base, int e) {
        Rational r = 1;
        Rational b = base;
        if (e < 0) {
            if (b == 0) throw std::domain_error("negative power of zero");
            b = 1 / b;
            e = -e;
        }
        mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(e));
        r.canonicalize();
        return r;
    };
    Rational acc = 0;
    for (const auto& t : terms_) acc += Rational(t.coeff) * power(v0, t.ev) * power(s0, t.es);
    return acc;
}

Laurent gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero() || b.is_zero()) {
        Laurent r = strip_monomial(a.is_zero() ? b : a);
        if (r.leading().coeff < 0) r = -r;
        return r;
    }
    if (a.is_monomial() || b.is_monomial()) {
        Integer g = gcd(a.content(), b.content());
        return Laurent(g);
    }
    Laurent pa = strip_monomial(a);
    Laurent pb = strip_monomial(b);
    Laurent r = from_bpoly(bgcd(to_bpoly(pa), to_bpoly(pb)));
    if (r.leading().coeff < 0) r = -r;
    return r;
}

std::optional<Laurent> exact_quotient(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return Laurent{};
    if (b.is_monomial()) {
        const Term& m = b.leading();
        Laurent r = a.shifted(-m.ev, -m.es);
        for (const auto& t : r.terms())
            if (!mpz_divisible_p(t.coeff.get_mpz_t(), m.coeff.get_mpz_t())) return std::nullopt;
        return r.divided_by_integer(m.coeff);
    }
    // Lexicographic long division.  If a = q b then lexmin(a) = lexmin(q) +
    // lexmin(b), which bounds the quotient terms from below.
    const Term& lb = b.leading();
    const Term& mb = b.terms().front();
    const Term& ma = a.terms().front();
    const std::uint64_t floor = pack(ma.ev - mb.ev, ma.es - mb.es);

    std::map<std::uint64_t, Term> rem;
    for (const auto& t : a.terms()) rem.emplace(pack(t.ev, t.es), t);
    std::vector<Term> quotient;
    while (!rem.empty()) {
        const Term& lr = rem.rbegin()->second;
        int qv = lr.ev - lb.ev;
        int qs = lr.es - lb.es;
        if (pack(qv, qs) < floor) return std::nullopt;
        if (!mpz_divisible_p(lr.coeff.get_mpz_t(), lb.coeff.get_mpz_t())) return std::nullopt;
        Integer qc;
        mpz_divexact(qc.get_mpz_t(), lr.coeff.get_mpz_t(), lb.coeff.get_mpz_t());
        for (const auto& t : b.terms()) {
            std::uint64_t key = pack(t.ev + qv, t.es + qs);
            auto it = rem.find(key);
            if (it == rem.end()) {
                rem.emplace(key, Term{t.ev + qv, t.es + qs, Integer(-qc * t.coeff)});
            } else {
                it->second.coeff -= qc * t.coeff;
                if (it->second.coeff == 0) rem.erase(it);
            }
        }
        quotient.push_back({qv, qs, std::move(qc)});
    }
    return Laurent::from_terms(std::move(quotient));
}

std::string to_string(const Laurent& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Integer c = t.coeff;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string mono;
        auto var = [&mono](const char* name, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (e != 1) mono += "^" + std::to_string(e);
        };
        var("v", t.ev);
        var("s", t.es);
        if (mono.empty()) {
            out += c.get_str();
        } else if (c == 1) {
            out += mono;
        } else {
            out += c.get_str() + "*" + mono;
        }
    }
    return out;
}

}  // namespace skein
