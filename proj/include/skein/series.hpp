#pragma once

// Truncated power series in one variable t over a commutative coefficient
// algebra.  The same engine runs over scalars, symmetric functions and
// central Hecke elements.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "skein/scalar.hpp"

namespace skein {

/// Coefficient-algebra interface.  Specializations provide
///   static A zero_like(const A&), one_like(const A&)
///   static bool is_zero(const A&)
///   static A scale(const A&, const Scalar&)
///   static std::optional<A> inverse(const A&)
///   static nlohmann::json to_json(const A&)
///   static constexpr const char* name
/// plus the usual +, -, * and == on A.
template <class A>
struct CoeffTraits;

template <>
struct CoeffTraits<Scalar> {
    static constexpr const char* name = "scalar";
    static Scalar zero_like(const Scalar&) { return {}; }
    static Scalar one_like(const Scalar&) { return 1; }
    static bool is_zero(const Scalar& a) { return a.is_zero(); }
    static Scalar scale(const Scalar& a, const Scalar& c) { return a * c; }
    static std::optional<Scalar> inverse(const Scalar& a) {
        if (a.is_zero()) return std::nullopt;
        return a.inv();
    }
    static nlohmann::json to_json(const Scalar& a) { return skein::to_json(a); }
};

class SeriesError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class A>
class TruncSeries {
    using Traits = CoeffTraits<A>;

public:
    /// Coefficients c_0..c_N; the order N is coeffs.size() - 1.
    explicit TruncSeries(std::vector<A> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw SeriesError("a series needs at least the constant coefficient");
    }

    /// c + 0 t + ... + 0 t^N.
    static TruncSeries constant(const A& c, int order) {
        std::vector<A> cs(order + 1, Traits::zero_like(c));
        cs[0] = c;
        return TruncSeries(std::move(cs));
    }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const A& operator[](int k) const { return c_.at(k); }
    const std::vector<A>& coeffs() const noexcept { return c_; }

    TruncSeries truncated(int order) const {
        if (order > this->order()) throw SeriesError("cannot extend a truncated series");
        return TruncSeries(std::vector<A>(c_.begin(), c_.begin() + order + 1));
    }

    friend TruncSeries operator+(const TruncSeries& f, const TruncSeries& g) {
        const int n = std::min(f.order(), g.order());
        std::vector<A> r;
        r.reserve(n + 1);
        for (int k = 0; k <= n; ++k) r.push_back(f.c_[k] + g.c_[k]);
        return TruncSeries(std::move(r));
    }

    friend TruncSeries operator-(const TruncSeries& f, const TruncSeries& g) {
        const int n = std::min(f.order(), g.order());
        std::vector<A> r;
        r.reserve(n + 1);
        for (int k = 0; k <= n; ++k) r.push_back(f.c_[k] - g.c_[k]);
        return TruncSeries(std::move(r));
    }

    /// Cauchy product, truncated to the smaller order.
    friend TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) {
        const int n = std::min(f.order(), g.order());
        std::vector<A> r;
        r.reserve(n + 1);
        for (int k = 0; k <= n; ++k) {
            A acc = Traits::zero_like(f.c_[0]);
            for (int i = 0; i <= k; ++i) {
                if (Traits::is_zero(f.c_[i]) || Traits::is_zero(g.c_[k - i])) continue;
                acc = acc + f.c_[i] * g.c_[k - i];
            }
            r.push_back(std::move(acc));
        }
        return TruncSeries(std::move(r));
    }

    friend bool operator==(const TruncSeries& f, const TruncSeries& g) { return f.c_ == g.c_; }

    nlohmann::json to_json() const {
        auto arr = nlohmann::json::array();
        for (const auto& c : c_) arr.push_back(Traits::to_json(c));
        return {{"algebra", Traits::name}, {"coeffs", std::move(arr)}};
    }

private:
    std::vector<A> c_;
};

/// f^{-1} mod t^{N+1}; the constant term must be invertible in A.
template <class A>
TruncSeries<A> inverse(const TruncSeries<A>& f) {
    using Traits = CoeffTraits<A>;
    auto c0inv = Traits::inverse(f[0]);
    if (!c0inv) throw SeriesError("constant term is not invertible");
    std::vector<A> g;
    g.reserve(f.order() + 1);
    g.push_back(*c0inv);
    for (int k = 1; k <= f.order(); ++k) {
        A acc = Traits::zero_like(f[0]);
        for (int j = 1; j <= k; ++j) {
            if (Traits::is_zero(f[j])) continue;
            acc = acc + f[j] * g[k - j];
        }
        g.push_back(Traits::scale(*c0inv * acc, Scalar(-1)));
    }
    return TruncSeries<A>(std::move(g));
}

/// ln f for f with constant term 1, via k L_k = k f_k - sum_{j<k} j L_j f_{k-j}.
template <class A>
TruncSeries<A> log(const TruncSeries<A>& f) {
    using Traits = CoeffTraits<A>;
    if (!(f[0] == Traits::one_like(f[0]))) throw SeriesError("log needs constant term 1");
    std::vector<A> L;
    L.reserve(f.order() + 1);
    L.push_back(Traits::zero_like(f[0]));
    for (int k = 1; k <= f.order(); ++k) {
        A acc = Traits::zero_like(f[0]);
        for (int j = 1; j < k; ++j) {
            if (Traits::is_zero(L[j]) || Traits::is_zero(f[k - j])) continue;
            acc = acc + Traits::scale(L[j] * f[k - j], Scalar(j));
        }
        L.push_back(f[k] - Traits::scale(acc, Scalar::rational(1, k)));
    }
    return TruncSeries<A>(std::move(L));
}

/// exp f for f with constant term 0, via k E_k = sum_{j<=k} j f_j E_{k-j}.
template <class A>
TruncSeries<A> exp(const TruncSeries<A>& f) {
    using Traits = CoeffTraits<A>;
    if (!Traits::is_zero(f[0])) throw SeriesError("exp needs constant term 0");
    std::vector<A> E;
    E.reserve(f.order() + 1);
    E.push_back(Traits::one_like(f[0]));
    for (int k = 1; k <= f.order(); ++k) {
        A acc = Traits::zero_like(f[0]);
        for (int j = 1; j <= k; ++j) {
            if (Traits::is_zero(f[j])) continue;
            acc = acc + Traits::scale(f[j] * E[k - j], Scalar(j));
        }
        E.push_back(Traits::scale(acc, Scalar::rational(1, k)));
    }
    return TruncSeries<A>(std::move(E));
}

/// t -> c t: the k-th coefficient is multiplied by c^k.
template <class A>
TruncSeries<A> scale_t(const TruncSeries<A>& f, const Scalar& c) {
    using Traits = CoeffTraits<A>;
    std::vector<A> r;
    r.reserve(f.order() + 1);
    Scalar p = 1;
    for (int k = 0; k <= f.order(); ++k) {
        r.push_back(k == 0 ? f[0] : Traits::scale(f[k], p));
        p *= c;
    }
    return TruncSeries<A>(std::move(r));
}

}  // namespace skein
