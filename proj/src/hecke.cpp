#include "skein/hecke.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace skein {

namespace {

void check_strands(int n) {
    if (n < 0 || n > kMaxStrands)
        throw std::invalid_argument("strand count " + std::to_string(n) + " outside 0.." +
                                    std::to_string(kMaxStrands));
}

void check_same(const HeckeElt& a, const HeckeElt& b) {
    if (a.strands() != b.strands())
        throw std::invalid_argument("strand mismatch: H_" + std::to_string(a.strands()) +
                                    " vs H_" + std::to_string(b.strands()));
}

void check_generator(int n, int i) {
    if (i < 1 || i >= n)
        throw std::invalid_argument("generator index " + std::to_string(i) + " out of range for " +
                                    std::to_string(n) + " strands");
}

// Dense accumulation over the n! basis elements.
class Accumulator {
public:
    explicit Accumulator(int n) : n_(n), dense_(SymmetricGroup::get(n).order()), used_(dense_.size(), 0) {}

    void add(std::uint32_t r, const Scalar& c) {
        if (c.is_zero()) return;
        if (!used_[r]) {
            used_[r] = 1;
            touched_.push_back(r);
            dense_[r] = c;
        } else {
            dense_[r] += c;
        }
    }

    void add(const HeckeElt& x, const Scalar& c) {
        if (c.is_one()) {
            for (const auto& [r, a] : x.rank_terms()) add(r, a);
        } else {
            for (const auto& [r, a] : x.rank_terms()) add(r, a * c);
        }
    }

    HeckeElt finish() {
        std::sort(touched_.begin(), touched_.end());
        std::vector<HeckeElt::RankTerm> terms;
        terms.reserve(touched_.size());
        for (auto r : touched_)
            if (!dense_[r].is_zero()) terms.emplace_back(r, std::move(dense_[r]));
        return HeckeElt::from_rank_terms(n_, std::move(terms));
    }

private:
    int n_;
    std::vector<Scalar> dense_;
    std::vector<char> used_;
    std::vector<std::uint32_t> touched_;
};

// Right (Left = false) or left multiplication of a basis element by
// sigma_i^sign, written as contributions into `out`.
template <bool Left>
void gen_contributions(const SymmetricGroup& g, std::uint32_t r, const Scalar& c, int i, int sign,
                       const Scalar& z, std::vector<HeckeElt::RankTerm>& out) {
    const std::uint32_t moved = Left ? g.left(r, i) : g.right(r, i);
    const bool up = g.length(moved) > g.length(r);
    out.emplace_back(moved, c);
    // sigma^2 = z sigma + 1 when going down; sigma^{-1} = sigma - z when going up.
    if (sign > 0 && !up) out.emplace_back(r, c * z);
    if (sign < 0 && up) out.emplace_back(r, -(c * z));
}

}  // namespace

HeckeElt::HeckeElt(int n) : n_(n) { check_strands(n); }

HeckeElt HeckeElt::scalar(int n, const Scalar& c) {
    HeckeElt x(n);
    if (!c.is_zero()) x.terms_.emplace_back(0, c);
    return x;
}

HeckeElt HeckeElt::basis(const Perm& p, const Scalar& c) {
    HeckeElt x(p.size());
    if (!c.is_zero()) x.terms_.emplace_back(SymmetricGroup::get(p.size()).rank(p), c);
    return x;
}

HeckeElt HeckeElt::generator(int n, int i, int sign) {
    check_strands(n);
    check_generator(n, i);
    return identity(n).times_generator(i, sign);
}

HeckeElt HeckeElt::from_rank_terms(int n, std::vector<RankTerm> terms) {
    HeckeElt x(n);
    std::sort(terms.begin(), terms.end(),
              [](const RankTerm& a, const RankTerm& b) { return a.first < b.first; });
    for (auto& t : terms) {
        if (!x.terms_.empty() && x.terms_.back().first == t.first) {
            x.terms_.back().second += t.second;
        } else {
            if (!x.terms_.empty() && x.terms_.back().second.is_zero()) x.terms_.pop_back();
            x.terms_.push_back(std::move(t));
        }
    }
    if (!x.terms_.empty() && x.terms_.back().second.is_zero()) x.terms_.pop_back();
    return x;
}

Scalar HeckeElt::coeff(const Perm& p) const {
    if (p.size() != n_) throw std::invalid_argument("permutation size mismatch");
    const auto r = SymmetricGroup::get(n_).rank(p);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), r,
                               [](const RankTerm& t, std::uint32_t key) { return t.first < key; });
    if (it == terms_.end() || it->first != r) return {};
    return it->second;
}

std::vector<std::pair<Perm, Scalar>> HeckeElt::terms() const {
    const auto& g = SymmetricGroup::get(n_);
    std::vector<std::pair<Perm, Scalar>> out;
    out.reserve(terms_.size());
    for (const auto& [r, c] : terms_) out.emplace_back(g.perm(r), c);
    return out;
}

std::optional<Scalar> HeckeElt::as_scalar() const {
    if (terms_.empty()) return Scalar{};
    if (terms_.size() == 1 && terms_[0].first == 0) return terms_[0].second;
    return std::nullopt;
}

HeckeElt HeckeElt::times_generator(int i, int sign) const {
    check_generator(n_, i);
    const auto& g = SymmetricGroup::get(n_);
    const Scalar z = sym::z();
    std::vector<RankTerm> out;
    out.reserve(2 * terms_.size());
    for (const auto& [r, c] : terms_) gen_contributions<false>(g, r, c, i, sign, z, out);
    return from_rank_terms(n_, std::move(out));
}

HeckeElt HeckeElt::generator_times(int i, int sign) const {
    check_generator(n_, i);
    const auto& g = SymmetricGroup::get(n_);
    const Scalar z = sym::z();
    std::vector<RankTerm> out;
    out.reserve(2 * terms_.size());
    for (const auto& [r, c] : terms_) gen_contributions<true>(g, r, c, i, sign, z, out);
    return from_rank_terms(n_, std::move(out));
}

HeckeElt HeckeElt::operator-() const {
    HeckeElt x = *this;
    for (auto& t : x.terms_) t.second = -t.second;
    return x;
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
    check_same(*this, o);
    if (o.terms_.empty()) return *this;
    std::vector<RankTerm> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            merged.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            merged.push_back(o.terms_[j++]);
        } else {
            Scalar c = terms_[i].second + o.terms_[j].second;
            if (!c.is_zero()) merged.emplace_back(terms_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) { return *this += -o; }

HeckeElt& HeckeElt::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto& t : terms_) t.second *= c;
    return *this;
}

HeckeElt operator*(const HeckeElt& x, const HeckeElt& y) {
    check_same(x, y);
    if (x.is_zero() || y.is_zero()) return HeckeElt(x.strands());
    if (auto c = y.as_scalar()) return x * *c;
    if (auto c = x.as_scalar()) return y * *c;
    const auto& g = SymmetricGroup::get(x.strands());
    std::vector<std::uint32_t> targets;
    targets.reserve(y.size());
    for (const auto& t : y.rank_terms()) targets.push_back(t.first);
    Accumulator acc(x.strands());
    // x * omega_rho, built along the canonical word of rho (lengths add).
    walk_canonical_words(
        g, targets, x, [](HeckeElt value, int gen) { return value.times_generator(gen); },
        [&](std::uint32_t r, const HeckeElt& value) {
            auto it = std::lower_bound(
                y.rank_terms().begin(), y.rank_terms().end(), r,
                [](const HeckeElt::RankTerm& t, std::uint32_t key) { return t.first < key; });
            acc.add(value, it->second);
        });
    return acc.finish();
}

HeckeElt mul_basis_by_gen(const Perm& pi, int i, int sign) {
    return HeckeElt::basis(pi).times_generator(i, sign);
}

HeckeElt word_elt(int n, std::span<const int> word) {
    HeckeElt x = HeckeElt::identity(n);
    for (int w : word) {
        if (w == 0) throw std::invalid_argument("braid word contains 0");
        x = x.times_generator(w > 0 ? w : -w, w > 0 ? 1 : -1);
    }
    return x;
}

HeckeElt pow(const HeckeElt& x, int m) {
    if (m < 0) throw std::invalid_argument("negative power of a Hecke element");
    HeckeElt result = HeckeElt::identity(x.strands());
    for (int k = 0; k < m; ++k) result = result * x;
    return result;
}

HeckeElt include(const HeckeElt& x, int n_prime) {
    if (n_prime < x.strands())
        throw std::invalid_argument("cannot include H_" + std::to_string(x.strands()) + " in H_" +
                                    std::to_string(n_prime));
    check_strands(n_prime);
    if (n_prime == x.strands()) return x;
    const auto& big = SymmetricGroup::get(n_prime);
    std::vector<HeckeElt::RankTerm> terms;
    for (const auto& [p, c] : x.terms()) {
        std::vector<int> line = p.one_line();
        for (int k = p.size() + 1; k <= n_prime; ++k) line.push_back(k);
        terms.emplace_back(big.rank(Perm(line)), c);
    }
    return HeckeElt::from_rank_terms(n_prime, std::move(terms));
}

HeckeElt murphy_M(int j, int n) {
    if (j < 2 || j > n) throw std::invalid_argument("murphy_M needs 2 <= j <= n");
    HeckeElt m(n);
    for (int i = 1; i < j; ++i) m += HeckeElt::basis(transposition(i, j, n));
    return m;
}

HeckeElt murphy_T(int j, int n) {
    if (j < 1 || j > n) throw std::invalid_argument("murphy_T needs 1 <= j <= n");
    std::vector<int> word;
    for (int i = j - 1; i >= 1; --i) word.push_back(i);
    for (int i = 1; i <= j - 1; ++i) word.push_back(i);
    return word_elt(n, word);
}

HeckeElt t_circle(int n) {
    check_strands(n);
    HeckeElt sum(n);
    for (int j = 1; j <= n; ++j) sum += murphy_T(j, n);
    return HeckeElt::scalar(n, sym::delta()) + sum * (sym::z() * sym::v().inv());
}

HeckeElt gamma(int n) {
    if (n < 1) throw std::invalid_argument("gamma needs n >= 1");
    HeckeElt g = HeckeElt::identity(n);
    std::vector<int> word;
    Scalar sp = 1;
    for (int k = n - 1; k >= 1; --k) {
        word.push_back(k);
        sp *= sym::s();
        g += word_elt(n, word) * sp;
    }
    return g;
}

namespace {

HeckeElt length_weighted_sum(int n, const Scalar& base) {
    const auto& g = SymmetricGroup::get(n);
    std::vector<HeckeElt::RankTerm> terms;
    terms.reserve(g.order());
    std::vector<Scalar> powers;
    for (std::uint32_t r = 0; r < g.order(); ++r) {
        const int l = g.length(r);
        while (static_cast<int>(powers.size()) <= l)
            powers.push_back(powers.empty() ? Scalar(1) : powers.back() * base);
        terms.emplace_back(r, powers[l]);
    }
    return HeckeElt::from_rank_terms(n, std::move(terms));
}

}  // namespace

HeckeElt a_sym(int n) {
    check_strands(n);
    return length_weighted_sum(n, sym::s());
}

HeckeElt b_sym(int n) {
    check_strands(n);
    return length_weighted_sum(n, -sym::s().inv());
}

Scalar phi_eval(const HeckeElt& x, const Scalar& value) {
    const auto& g = SymmetricGroup::get(x.strands());
    Scalar total;
    for (const auto& [r, c] : x.rank_terms()) total += c * value.pow(g.length(r));
    return total;
}

Scalar phi_s(const HeckeElt& x) { return phi_eval(x, sym::s()); }

HeckeElt h_idem(int n) {
    HeckeElt a = a_sym(n);
    return a * phi_s(a).inv();
}

HeckeElt e_idem(int n) {
    HeckeElt b = b_sym(n);
    return b * phi_eval(b, -sym::s().inv()).inv();
}

HeckeElt mirror(const HeckeElt& x) {
    const int n = x.strands();
    if (x.is_zero()) return x;
    const auto& g = SymmetricGroup::get(n);
    std::vector<std::uint32_t> targets;
    for (const auto& t : x.rank_terms()) targets.push_back(t.first);
    Accumulator acc(n);
    // Terms are visited in trie order, so coefficients are looked up by rank.
    walk_canonical_words(
        g, targets, HeckeElt::identity(n),
        [](HeckeElt value, int gen) { return value.times_generator(gen, -1); },
        [&](std::uint32_t r, const HeckeElt& value) {
            auto it = std::lower_bound(
                x.rank_terms().begin(), x.rank_terms().end(), r,
                [](const HeckeElt::RankTerm& t, std::uint32_t key) { return t.first < key; });
            acc.add(value, mirror(it->second));
        });
    return acc.finish();
}

bool is_central(const HeckeElt& x) {
    for (int i = 1; i < x.strands(); ++i)
        if (!(x.times_generator(i) == x.generator_times(i))) return false;
    return true;
}

HeckeElt power_sum_T(int m, int n) {
    if (m < 1) throw std::invalid_argument("power_sum_T needs m >= 1");
    HeckeElt sum(n);
    for (int j = 1; j <= n; ++j) sum += pow(murphy_T(j, n), m);
    return sum;
}

HeckeElt rescale(const HeckeElt& x, const Scalar& x_param) {
    const auto& g = SymmetricGroup::get(x.strands());
    std::vector<HeckeElt::RankTerm> terms;
    for (const auto& [r, c] : x.rank_terms()) terms.emplace_back(r, c * x_param.pow(g.length(r)));
    return HeckeElt::from_rank_terms(x.strands(), std::move(terms));
}

TruncSeries<HeckeElt> murphy_series(int n, int order) {
    if (order < 0) throw std::invalid_argument("negative series order");
    auto result = TruncSeries<HeckeElt>::constant(HeckeElt::identity(n), order);
    for (int j = 1; j <= n; ++j) {
        const HeckeElt t = murphy_T(j, n);
        std::vector<HeckeElt> geometric;
        geometric.push_back(HeckeElt::identity(n));
        for (int k = 1; k <= order; ++k) geometric.push_back(geometric.back() * t);
        result = result * TruncSeries<HeckeElt>(std::move(geometric));
    }
    return result;
}

TruncSeries<HeckeElt> elem_murphy_series(int n, int order) {
    if (order < 0) throw std::invalid_argument("negative series order");
    auto result = TruncSeries<HeckeElt>::constant(HeckeElt::identity(n), order);
    for (int j = 1; j <= n; ++j) {
        std::vector<HeckeElt> linear(order + 1, HeckeElt(n));
        linear[0] = HeckeElt::identity(n);
        if (order >= 1) linear[1] = murphy_T(j, n);
        result = result * TruncSeries<HeckeElt>(std::move(linear));
    }
    return result;
}

nlohmann::json CoeffTraits<HeckeElt>::to_json(const HeckeElt& a) { return skein::to_json(a); }

nlohmann::json to_json(const HeckeElt& x) {
    auto terms = nlohmann::json::array();
    for (const auto& [p, c] : x.terms()) terms.push_back({{"perm", to_json(p)}, {"coeff", to_json(c)}});
    return {{"n", x.strands()}, {"terms", std::move(terms)}};
}

HeckeElt hecke_from_json(const nlohmann::json& j) {
    HeckeElt x(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        Perm p = perm_from_json(t.at("perm"));
        if (p.size() != x.strands()) throw std::invalid_argument("term permutation has wrong size");
        x += HeckeElt::basis(p, scalar_from_json(t.at("coeff")));
    }
    return x;
}

std::string to_string(const HeckeElt& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [p, c] : x.terms()) {
        if (!out.empty()) out += " + ";
        std::string perm;
        for (int k : p.one_line()) perm += std::to_string(k);
        out += "(" + to_string(c) + ")*w[" + perm + "]";
    }
    return out;
}

}  // namespace skein
