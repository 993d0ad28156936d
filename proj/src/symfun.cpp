#include "skein/symfun.hpp"

#include <bit>
#include <mutex>
#include <sstream>

#include "skein/repn.hpp"

namespace skein {

namespace {

template <class Tag>
nlohmann::json poly_json(const GeneratorPoly<Tag>& f) {
    auto terms = nlohmann::json::array();
    for (const auto& [lambda, c] : f.terms())
        terms.push_back({{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
    return {{"basis", Tag::basis}, {"terms", std::move(terms)}};
}

template <class Tag>
std::optional<GeneratorPoly<Tag>> poly_inverse(const GeneratorPoly<Tag>& f) {
    if (f.terms().size() != 1 || f.terms().begin()->first.weight() != 0) return std::nullopt;
    return GeneratorPoly<Tag>::constant(f.terms().begin()->second.inv());
}

// Caches shared across threads.
std::mutex g_mutex;

SymFunc schur_uncached(const Partition& lambda) {
    const int l = lambda.length();
    if (l == 0) return SymFunc::constant(1);
    // det(h_{lambda_i - i + j}) by row expansion, memoized on the set of used columns.
    std::vector<std::optional<SymFunc>> memo(std::size_t{1} << l);
    const unsigned full = (1u << l) - 1;
    auto det = [&](auto&& self, unsigned used) -> SymFunc {
        if (used == full) return SymFunc::constant(1);
        auto& slot = memo[used];
        if (slot) return *slot;
        const int row = std::popcount(used);
        SymFunc acc;
        int free_before = 0;
        for (int col = 0; col < l; ++col) {
            if (used & (1u << col)) continue;
            const int k = lambda.part(row) - row + col;
            if (k >= 0) {
                SymFunc minor = self(self, used | (1u << col));
                SymFunc term = h(k) * minor;
                if (free_before % 2) acc -= term;
                else acc += term;
            }
            ++free_before;
        }
        slot = acc;
        return acc;
    };
    return det(det, 0);
}

}  // namespace

std::optional<SymFunc> CoeffTraits<SymFunc>::inverse(const SymFunc& a) { return poly_inverse(a); }
nlohmann::json CoeffTraits<SymFunc>::to_json(const SymFunc& a) { return poly_json(a); }
std::optional<PowerSumPoly> CoeffTraits<PowerSumPoly>::inverse(const PowerSumPoly& a) {
    return poly_inverse(a);
}
nlohmann::json CoeffTraits<PowerSumPoly>::to_json(const PowerSumPoly& a) { return poly_json(a); }

SymFunc elementary(int n) {
    if (n < 0) throw std::invalid_argument("elementary: negative degree");
    static std::vector<SymFunc> cache{SymFunc::constant(1)};
    std::lock_guard lock(g_mutex);
    while (static_cast<int>(cache.size()) <= n) {
        const int m = static_cast<int>(cache.size());
        // e_m = sum_{i<m} (-1)^{m-1-i} e_i h_{m-i}
        SymFunc e;
        for (int i = 0; i < m; ++i) {
            SymFunc term = cache[i] * h(m - i);
            if ((m - 1 - i) % 2) e -= term;
            else e += term;
        }
        cache.push_back(std::move(e));
    }
    return cache[n];
}

SymFunc schur(const Partition& lambda) {
    static std::map<Partition, SymFunc> cache;
    {
        std::lock_guard lock(g_mutex);
        auto it = cache.find(lambda);
        if (it != cache.end()) return it->second;
    }
    SymFunc r = schur_uncached(lambda);
    std::lock_guard lock(g_mutex);
    return cache.emplace(lambda, std::move(r)).first->second;
}

SymFunc from_schur(const SchurExpansion& f) {
    SymFunc r;
    for (const auto& [lambda, c] : f) r += schur(lambda) * c;
    return r;
}

SchurExpansion to_schur(const SymFunc& f) {
    // s_lambda = h_lambda + (h_mu with mu dominating lambda), and lexicographic
    // order refines dominance, so the lex-smallest h-term of the remainder is
    // always the leading term of exactly one Schur function.
    SchurExpansion out;
    SymFunc rest = f;
    while (!rest.is_zero()) {
        const auto& [lambda, c] = *rest.terms().begin();
        Partition l = lambda;
        Scalar coeff = c;
        rest -= schur(l) * coeff;
        out.emplace(std::move(l), std::move(coeff));
    }
    return out;
}

TruncSeries<SymFunc> complete_series(int order) {
    if (order < 0) throw SeriesError("negative order");
    std::vector<SymFunc> cs;
    for (int k = 0; k <= order; ++k) cs.push_back(h(k));
    return TruncSeries<SymFunc>(std::move(cs));
}

TruncSeries<SymFunc> elementary_series(int order) {
    if (order < 0) throw SeriesError("negative order");
    std::vector<SymFunc> cs;
    for (int k = 0; k <= order; ++k) cs.push_back(elementary(k));
    return TruncSeries<SymFunc>(std::move(cs));
}

SymFunc power_sum(int m) {
    if (m < 1) throw std::invalid_argument("power_sum needs m >= 1");
    static std::map<int, SymFunc> cache;
    {
        std::lock_guard lock(g_mutex);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    SymFunc p = log(complete_series(m))[m] * Scalar(m);
    std::lock_guard lock(g_mutex);
    return cache.emplace(m, std::move(p)).first->second;
}

PowerSumPoly h_in_p(int k) {
    if (k < 0) return {};
    static std::vector<PowerSumPoly> cache;
    std::lock_guard lock(g_mutex);
    if (static_cast<int>(cache.size()) <= k) {
        // H(t) = exp(sum_m p_m t^m / m)
        std::vector<PowerSumPoly> gen{PowerSumPoly{}};
        for (int m = 1; m <= k; ++m) gen.push_back(PowerSumPoly::generator(m, Scalar::rational(1, m)));
        cache = exp(TruncSeries<PowerSumPoly>(std::move(gen))).coeffs();
    }
    return cache[k];
}

PowerSumPoly to_p(const SymFunc& f) {
    PowerSumPoly r;
    for (const auto& [lambda, c] : f.terms()) {
        PowerSumPoly term = PowerSumPoly::constant(c);
        for (int part : lambda.parts()) term = term * h_in_p(part);
        r += term;
    }
    return r;
}

SymFunc from_p(const PowerSumPoly& f) {
    SymFunc r;
    for (const auto& [lambda, c] : f.terms()) {
        SymFunc term = SymFunc::constant(c);
        for (int part : lambda.parts()) term = term * power_sum(part);
        r += term;
    }
    return r;
}

TruncSeries<SymFunc> closed_braid_series(int order) {
    const Scalar s = sym::s();
    return scale_t(complete_series(order), s) * scale_t(elementary_series(order), -s.inv());
}

SymFunc closed_braid_A(int m) {
    if (m < 1) throw std::invalid_argument("closed_braid_A needs m >= 1");
    return closed_braid_series(m)[m] * sym::z().inv();
}

SymFunc mirror(const SymFunc& f) {
    SymFunc r;
    for (const auto& [lambda, c] : f.terms()) r.add(lambda, mirror(c));
    return r;
}

SymFunc phi_apply(const SymFunc& f, int n) {
    if (n < 0 || !f.is_homogeneous(n))
        throw std::invalid_argument("phi_apply needs a homogeneous input of degree " + std::to_string(n));
    SchurExpansion sf = to_schur(f);
    for (auto& [lambda, c] : sf) c *= t_lambda(lambda);
    return from_schur(sf);
}

nlohmann::json to_json(const SymFunc& f) { return poly_json(f); }
nlohmann::json to_json(const PowerSumPoly& f) { return poly_json(f); }

nlohmann::json schur_to_json(const SchurExpansion& f) {
    auto terms = nlohmann::json::array();
    for (const auto& [lambda, c] : f)
        terms.push_back({{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
    return {{"basis", "schur"}, {"terms", std::move(terms)}};
}

std::string to_string(const SymFunc& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lambda, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c) << ")";
        if (lambda.weight() > 0) os << "*h" << to_string(lambda);
    }
    return os.str();
}

}  // namespace skein
