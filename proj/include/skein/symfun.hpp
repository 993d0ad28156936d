#pragma once

// Symmetric functions over Scalar.  The working basis is the monomials
// h_lambda = h_{lambda_1} h_{lambda_2} ...; Schur and power-sum expansions
// are conversion layers on top of it.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "skein/partition.hpp"
#include "skein/scalar.hpp"
#include "skein/series.hpp"

namespace skein {

struct HTag {
    static constexpr const char* basis = "h";
};
struct PTag {
    static constexpr const char* basis = "p";
};

/// Polynomials in a family of commuting generators g_1, g_2, ..., with
/// monomials g_lambda indexed by partitions.  Zero coefficients are never
/// stored.
template <class Tag>
class GeneratorPoly {
public:
    using Terms = std::map<Partition, Scalar>;

    GeneratorPoly() = default;

    static GeneratorPoly constant(const Scalar& c) { return monomial(Partition{}, c); }
    static GeneratorPoly monomial(const Partition& lambda, const Scalar& c = 1) {
        GeneratorPoly f;
        f.add(lambda, c);
        return f;
    }
    /// g_k; g_0 = 1 and g_k = 0 for k < 0.
    static GeneratorPoly generator(int k, const Scalar& c = 1) {
        if (k < 0) return {};
        return monomial(k == 0 ? Partition{} : Partition{k}, c);
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Scalar coeff(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Scalar{} : it->second;
    }

    /// The common degree of all terms, if there is one (zero counts as degree d
    /// for every d, reported as 0).
    std::optional<int> degree() const {
        if (terms_.empty()) return 0;
        int d = terms_.begin()->first.weight();
        for (const auto& [lambda, c] : terms_)
            if (lambda.weight() != d) return std::nullopt;
        return d;
    }
    bool is_homogeneous(int d) const {
        for (const auto& [lambda, c] : terms_)
            if (lambda.weight() != d) return false;
        return true;
    }
    GeneratorPoly homogeneous_part(int d) const {
        GeneratorPoly r;
        for (const auto& [lambda, c] : terms_)
            if (lambda.weight() == d) r.terms_.emplace(lambda, c);
        return r;
    }

    void add(const Partition& lambda, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(lambda, c);
        if (fresh) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    GeneratorPoly operator-() const {
        GeneratorPoly r = *this;
        for (auto& [lambda, c] : r.terms_) c = -c;
        return r;
    }
    GeneratorPoly& operator+=(const GeneratorPoly& o) {
        for (const auto& [lambda, c] : o.terms_) add(lambda, c);
        return *this;
    }
    GeneratorPoly& operator-=(const GeneratorPoly& o) {
        for (const auto& [lambda, c] : o.terms_) add(lambda, -c);
        return *this;
    }
    GeneratorPoly& operator*=(const Scalar& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [lambda, x] : terms_) x *= c;
        return *this;
    }

    friend GeneratorPoly operator+(GeneratorPoly a, const GeneratorPoly& b) { return a += b; }
    friend GeneratorPoly operator-(GeneratorPoly a, const GeneratorPoly& b) { return a -= b; }
    friend GeneratorPoly operator*(GeneratorPoly a, const Scalar& c) { return a *= c; }
    friend GeneratorPoly operator*(const Scalar& c, GeneratorPoly a) { return a *= c; }
    friend GeneratorPoly operator*(const GeneratorPoly& a, const GeneratorPoly& b) {
        GeneratorPoly r;
        for (const auto& [la, ca] : a.terms_)
            for (const auto& [lb, cb] : b.terms_) r.add(join(la, lb), ca * cb);
        return r;
    }
    friend bool operator==(const GeneratorPoly& a, const GeneratorPoly& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

/// Symmetric functions in the h-monomial basis.
using SymFunc = GeneratorPoly<HTag>;
/// Symmetric functions in the power-sum basis p_lambda.
using PowerSumPoly = GeneratorPoly<PTag>;
/// A Schur expansion lambda -> coefficient, zero coefficients omitted.
using SchurExpansion = std::map<Partition, Scalar>;

template <>
struct CoeffTraits<SymFunc> {
    static constexpr const char* name = "symfun";
    static SymFunc zero_like(const SymFunc&) { return {}; }
    static SymFunc one_like(const SymFunc&) { return SymFunc::constant(1); }
    static bool is_zero(const SymFunc& a) { return a.is_zero(); }
    static SymFunc scale(const SymFunc& a, const Scalar& c) { return a * c; }
    static std::optional<SymFunc> inverse(const SymFunc& a);
    static nlohmann::json to_json(const SymFunc& a);
};

template <>
struct CoeffTraits<PowerSumPoly> {
    static constexpr const char* name = "powersum";
    static PowerSumPoly zero_like(const PowerSumPoly&) { return {}; }
    static PowerSumPoly one_like(const PowerSumPoly&) { return PowerSumPoly::constant(1); }
    static bool is_zero(const PowerSumPoly& a) { return a.is_zero(); }
    static PowerSumPoly scale(const PowerSumPoly& a, const Scalar& c) { return a * c; }
    static std::optional<PowerSumPoly> inverse(const PowerSumPoly& a);
    static nlohmann::json to_json(const PowerSumPoly& a);
};

inline SymFunc h(int k) { return SymFunc::generator(k); }

/// e_n from sum_{i+j=n} (-1)^i e_i h_j = 0, e_0 = 1.
SymFunc elementary(int n);

/// Jacobi-Trudi: det(h_{lambda_i - i + j}).
SymFunc schur(const Partition& lambda);
SymFunc from_schur(const SchurExpansion& f);
/// Inverse of schur(), by unitriangularity; exact for every input.
SchurExpansion to_schur(const SymFunc& f);

/// P_m = m [t^m] log H(t), m >= 1.
SymFunc power_sum(int m);
/// h_k written in power sums.
PowerSumPoly h_in_p(int k);
PowerSumPoly to_p(const SymFunc& f);
SymFunc from_p(const PowerSumPoly& f);

/// H(t) = sum h_k t^k and E(t) = sum e_k t^k through t^order.
TruncSeries<SymFunc> complete_series(int order);
TruncSeries<SymFunc> elementary_series(int order);

/// A_m from A(t) = H(st) E(-s^{-1} t) = 1 + z sum_m A_m t^m, m >= 1.
SymFunc closed_braid_A(int m);
/// The series 1 + z sum A_m t^m through t^order.
TruncSeries<SymFunc> closed_braid_series(int order);

/// Coefficients mirrored, h-monomials fixed.
SymFunc mirror(const SymFunc& f);

/// The meridian map on degree n: s_lambda -> t_lambda s_lambda.  Throws
/// std::invalid_argument unless f is homogeneous of degree n.
SymFunc phi_apply(const SymFunc& f, int n);

/// {"basis": "h", "terms": [{"partition": [...], "coeff": ...}]}.
nlohmann::json to_json(const SymFunc& f);
nlohmann::json to_json(const PowerSumPoly& f);
nlohmann::json schur_to_json(const SchurExpansion& f);
std::string to_string(const SymFunc& f);

}  // namespace skein
