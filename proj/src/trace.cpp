#include "skein/trace.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

namespace skein {

namespace {

// Trace values of basis elements, one table per strand count, scoped to a
// single markov_ev call.
class TraceMemo {
public:
    TraceMemo() : tables_(kMaxStrands + 1), delta_(sym::delta()), vinv_(sym::v().inv()) {}

    Scalar of(const HeckeElt& x) {
        if (x.strands() == 0) return x.as_scalar().value_or(Scalar{});
        Scalar total;
        for (const auto& [r, c] : x.rank_terms()) total += c * basis(x.strands(), r);
        return total;
    }

    const Scalar& basis(int n, std::uint32_t r) {
        auto& table = tables_[n];
        const auto& g = SymmetricGroup::get(n);
        if (table.empty()) table.resize(g.order());
        if (table[r]) return *table[r];
        CosetForm cf = coset_decompose(g.perm(r));
        Scalar value;
        if (n == 1) {
            value = delta_;
        } else if (!cf.k) {
            value = delta_ * basis(n - 1, SymmetricGroup::get(n - 1).rank(cf.u));
        } else {
            // omega_pi = omega_u sigma_{n-1} (sigma_{n-2} ... sigma_k); the
            // Markov move removes sigma_{n-1} at the cost of v^{-1}.
            HeckeElt rest = HeckeElt::basis(cf.u);
            for (int g2 = n - 2; g2 >= *cf.k; --g2) rest = rest.times_generator(g2);
            value = vinv_ * of(rest);
        }
        table[r] = std::move(value);
        return *table[r];
    }

private:
    std::vector<std::vector<std::optional<Scalar>>> tables_;
    Scalar delta_;
    Scalar vinv_;
};

Scalar ev_h(int k) {
    static std::mutex mutex;
    static std::map<int, Scalar> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    Scalar value = markov_ev(h_idem(k));
    std::lock_guard lock(mutex);
    return cache.emplace(k, std::move(value)).first->second;
}

}  // namespace

Scalar markov_ev(const HeckeElt& x) {
    TraceMemo memo;
    return memo.of(x);
}

Scalar ev_sym(const SymFunc& f) {
    Scalar total;
    for (const auto& [lambda, c] : f.terms()) {
        Scalar term = c;
        for (int part : lambda.parts()) term *= ev_h(part);
        total += term;
    }
    return total;
}

Scalar ev_sym(const PowerSumPoly& f) { return ev_sym(from_p(f)); }

HomflyResult homfly(int n, std::span<const int> word) {
    if (n < 1 || n > kMaxStrands)
        throw std::invalid_argument("strand count must be in 1.." + std::to_string(kMaxStrands));
    int writhe = 0;
    for (int w : word) {
        if (w == 0 || w >= n || -w >= n)
            throw std::invalid_argument("braid generator " + std::to_string(w) + " invalid on " +
                                        std::to_string(n) + " strands");
        writhe += w > 0 ? 1 : -1;
    }
    Scalar framed = markov_ev(word_elt(n, word));
    return {sym::v().pow(writhe) * framed / sym::delta(), writhe};
}

}  // namespace skein
