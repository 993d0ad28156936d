#include "skein/psi.hpp"

#include <map>
#include <stdexcept>

#include "skein/repn.hpp"
#include "skein/trace.hpp"

namespace skein {

namespace {

// (s^m - s^-m) v^-m
Scalar power_weight(int m) {
    return (sym::s().pow(m) - sym::s().pow(-m)) * sym::v().pow(-m);
}

Scalar ev_power_sum(int m) { return ev_sym(power_sum(m)); }

// Multiplicative extension of an image of each p_m.
template <class A, class Image>
A extend(const PowerSumPoly& f, A one, Image&& image) {
    std::map<int, A> cache;
    A total = one * Scalar(0);
    for (const auto& [lambda, c] : f.terms()) {
        A term = one * c;
        for (int m : lambda.parts()) {
            auto it = cache.find(m);
            if (it == cache.end()) it = cache.emplace(m, image(m)).first;
            term = term * it->second;
        }
        total = total + term;
    }
    return total;
}

}  // namespace

HeckeElt psi(int n, const PowerSumPoly& f) {
    if (n < 0 || n > kMaxStrands) throw std::invalid_argument("psi: strand count out of range");
    return extend(f, HeckeElt::identity(n), [n](int m) {
        return HeckeElt::scalar(n, ev_power_sum(m)) + power_sum_T(m, n) * power_weight(m);
    });
}

HeckeElt psi(int n, const SymFunc& f) { return psi(n, to_p(f)); }

MurphySeriesReport verify_murphy_series(int n, int order) {
    if (n < 0 || n > kMaxStrands || order < 0)
        throw std::invalid_argument("verify_murphy_series: parameters out of range");
    std::vector<HeckeElt> lhs;
    std::vector<HeckeElt> plane;
    for (int k = 0; k <= order; ++k) {
        lhs.push_back(psi(n, h(k)));
        plane.push_back(HeckeElt::scalar(n, ev_sym(h(k))));
    }
    const Scalar vinv = sym::v().inv();
    const auto hm = murphy_series(n, order);
    const auto rhs = TruncSeries<HeckeElt>(std::move(plane)) * scale_t(hm, sym::s() * vinv) *
                     inverse(scale_t(hm, sym::s().inv() * vinv));
    MurphySeriesReport report{n, order, {}};
    for (int k = 0; k <= order; ++k) report.degrees.push_back({k, lhs[k] == rhs[k]});
    return report;
}

bool psi_eigen_check(int n, const SymFunc& f, const Partition& lambda) {
    if (lambda.weight() != n) throw std::invalid_argument("psi_eigen_check: |lambda| != n");
    std::vector<int> contents;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.part(r); ++c) contents.push_back(c - r);
    const Scalar predicted = extend(to_p(f), Scalar(1), [&](int m) {
        Scalar sum;
        for (int c : contents) sum += sym::s().pow(2 * m * c);
        return ev_power_sum(m) + power_weight(m) * sum;
    });
    return central_scalar(psi(n, f), lambda) == predicted;
}

}  // namespace skein
