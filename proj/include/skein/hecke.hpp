#pragma once

// The Hecke algebra H_n in the basis of positive permutation braids, with the
// skein relations sigma_i^2 = z sigma_i + 1, z = s - 1/s.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "skein/perm.hpp"
#include "skein/scalar.hpp"
#include "skein/series.hpp"

namespace skein {

/// A finite Scalar-linear combination of positive permutation braids omega_pi,
/// pi in S_n.  Terms are stored by the lexicographic rank of pi and never
/// carry a zero coefficient, so equality is structural.  H_0 is identified
/// with the scalars.
class HeckeElt {
public:
    using RankTerm = std::pair<std::uint32_t, Scalar>;

    /// The zero element of H_n.
    explicit HeckeElt(int n = 0);

    static HeckeElt identity(int n) { return scalar(n, 1); }
    static HeckeElt scalar(int n, const Scalar& c);
    static HeckeElt basis(const Perm& p, const Scalar& c = 1);
    /// sigma_i or its inverse sigma_i - z.
    static HeckeElt generator(int n, int i, int sign = 1);
    /// Builds from (rank, coeff) pairs in any order, merging repeats.
    static HeckeElt from_rank_terms(int n, std::vector<RankTerm> terms);

    int strands() const noexcept { return n_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Scalar coeff(const Perm& p) const;
    const std::vector<RankTerm>& rank_terms() const noexcept { return terms_; }
    std::vector<std::pair<Perm, Scalar>> terms() const;
    /// If this is c * 1, returns c.
    std::optional<Scalar> as_scalar() const;

    /// x * sigma_i^sign.
    HeckeElt times_generator(int i, int sign = 1) const;
    /// sigma_i^sign * x.
    HeckeElt generator_times(int i, int sign = 1) const;

    HeckeElt operator-() const;
    HeckeElt& operator+=(const HeckeElt& o);
    HeckeElt& operator-=(const HeckeElt& o);
    HeckeElt& operator*=(const Scalar& c);

    friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
    friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
    friend HeckeElt operator*(HeckeElt a, const Scalar& c) { return a *= c; }
    friend HeckeElt operator*(const Scalar& c, HeckeElt a) { return a *= c; }
    friend HeckeElt operator*(const HeckeElt& x, const HeckeElt& y);
    friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    std::vector<RankTerm> terms_;
};

/// omega_pi * sigma_i^sign.
HeckeElt mul_basis_by_gen(const Perm& pi, int i, int sign);

/// Ordered product of sigma_{|w|}^{sign(w)} over a signed braid word.
HeckeElt word_elt(int n, std::span<const int> word);

HeckeElt pow(const HeckeElt& x, int m);

/// Standard inclusion H_n -> H_{n'} (extra strands fixed).
HeckeElt include(const HeckeElt& x, int n_prime);

/// M(j) = sum_{i<j} omega_{(i j)}, 2 <= j <= n.
HeckeElt murphy_M(int j, int n);
/// T(j) = (sigma_{j-1} ... sigma_1)(sigma_1 ... sigma_{j-1}); T(1) = 1.
HeckeElt murphy_T(int j, int n);
/// The encircling tangle T^(n), resolved as delta + z v^-1 sum_j T(j).
HeckeElt t_circle(int n);
/// gamma_n = 1 + s sigma_{n-1} + ... + s^{n-1} sigma_{n-1}...sigma_1.
HeckeElt gamma(int n);
/// a_n = sum s^{l(pi)} omega_pi.
HeckeElt a_sym(int n);
/// b_n = sum (-s)^{-l(pi)} omega_pi.
HeckeElt b_sym(int n);
/// sum_pi c_pi * value^{l(pi)}: the one-dimensional evaluation sigma_i -> value.
Scalar phi_eval(const HeckeElt& x, const Scalar& value);
/// phi_eval at s, the evaluation fixed by a_n.
Scalar phi_s(const HeckeElt& x);
/// Row idempotent a_n / phi_s(a_n).
HeckeElt h_idem(int n);
/// Column idempotent b_n / phi_{-1/s}(b_n).
HeckeElt e_idem(int n);
/// Switch all crossings and invert v, s in the coefficients.
HeckeElt mirror(const HeckeElt& x);
bool is_central(const HeckeElt& x);
/// sum_{j=1}^n T(j)^m.
HeckeElt power_sum_T(int m, int n);
/// omega_pi -> x^{l(pi)} omega_pi.
HeckeElt rescale(const HeckeElt& x, const Scalar& x_param);

template <>
struct CoeffTraits<HeckeElt> {
    static constexpr const char* name = "hecke";
    static HeckeElt zero_like(const HeckeElt& a) { return HeckeElt(a.strands()); }
    static HeckeElt one_like(const HeckeElt& a) { return HeckeElt::identity(a.strands()); }
    static bool is_zero(const HeckeElt& a) { return a.is_zero(); }
    static HeckeElt scale(const HeckeElt& a, const Scalar& c) { return a * c; }
    /// Only scalar multiples of the identity are inverted.
    static std::optional<HeckeElt> inverse(const HeckeElt& a) {
        auto c = a.as_scalar();
        if (!c || c->is_zero()) return std::nullopt;
        return HeckeElt::scalar(a.strands(), c->inv());
    }
    static nlohmann::json to_json(const HeckeElt& a);
};

/// HM(t) = prod_j (1 - T(j) t)^{-1}, through t^order.
TruncSeries<HeckeElt> murphy_series(int n, int order);
/// EM(t) = prod_j (1 + T(j) t), through t^order.
TruncSeries<HeckeElt> elem_murphy_series(int n, int order);

/// {"n": n, "terms": [{"perm": [...], "coeff": ...}, ...]}, lexicographic.
nlohmann::json to_json(const HeckeElt& x);
HeckeElt hecke_from_json(const nlohmann::json& j);
std::string to_string(const HeckeElt& x);

}  // namespace skein
