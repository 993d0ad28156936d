#include "skein/perm.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace skein {

Perm::Perm(std::span<const int> one_line) {
    if (one_line.size() > static_cast<std::size_t>(kMaxStrands))
        throw std::invalid_argument("permutation larger than " + std::to_string(kMaxStrands) +
                                    " strands");
    n_ = static_cast<std::uint8_t>(one_line.size());
    std::array<bool, kMaxStrands + 1> seen{};
    for (int i = 0; i < n_; ++i) {
        int x = one_line[i];
        if (x < 1 || x > n_ || seen[x])
            throw std::invalid_argument("not a permutation in one-line notation");
        seen[x] = true;
        img_[i] = static_cast<std::uint8_t>(x);
    }
}

Perm::Perm(std::initializer_list<int> one_line)
    : Perm(std::span<const int>(one_line.begin(), one_line.size())) {}

Perm Perm::identity(int n) {
    if (n < 0 || n > kMaxStrands) throw std::invalid_argument("bad strand count");
    Perm p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(i + 1);
    return p;
}

std::vector<int> Perm::one_line() const { return {img_.begin(), img_.begin() + n_}; }

Perm Perm::times_generator(int i) const {
    if (i < 1 || i >= n_) throw std::invalid_argument("generator index out of range");
    Perm p = *this;
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

Perm Perm::generator_times(int i) const {
    if (i < 1 || i >= n_) throw std::invalid_argument("generator index out of range");
    Perm p = *this;
    for (int k = 0; k < n_; ++k) {
        if (p.img_[k] == i)
            p.img_[k] = static_cast<std::uint8_t>(i + 1);
        else if (p.img_[k] == i + 1)
            p.img_[k] = static_cast<std::uint8_t>(i);
    }
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> r(a.size());
    for (int i = 1; i <= a.size(); ++i) r[i - 1] = a(b(i));
    return Perm(r);
}

Perm inverse(const Perm& a) {
    std::vector<int> r(a.size());
    for (int i = 1; i <= a.size(); ++i) r[a(i) - 1] = i;
    return Perm(r);
}

int length(const Perm& a) {
    int inv = 0;
    for (int i = 1; i <= a.size(); ++i)
        for (int j = i + 1; j <= a.size(); ++j)
            if (a(i) > a(j)) ++inv;
    return inv;
}

CosetForm coset_decompose(const Perm& a) {
    const int n = a.size();
    if (n == 0) return {a, std::nullopt};
    std::vector<int> line = a.one_line();
    auto pos = std::find(line.begin(), line.end(), n);
    int k = static_cast<int>(pos - line.begin()) + 1;
    line.erase(pos);
    Perm u(line);
    if (k == n) return {u, std::nullopt};
    return {u, k};
}

std::vector<int> reduced_word(const Perm& a) {
    std::vector<std::vector<int>> segments;
    Perm p = a;
    while (p.size() > 0) {
        const int m = p.size();
        CosetForm c = coset_decompose(p);
        if (c.k) {
            std::vector<int> seg;
            for (int g = m - 1; g >= *c.k; --g) seg.push_back(g);
            segments.push_back(std::move(seg));
        }
        p = c.u;
    }
    std::vector<int> word;
    for (auto it = segments.rbegin(); it != segments.rend(); ++it)
        word.insert(word.end(), it->begin(), it->end());
    return word;
}

Perm word_product(int n, std::span<const int> word) {
    Perm p = Perm::identity(n);
    for (int g : word) p = p.times_generator(g);
    return p;
}

Perm transposition(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("transposition needs 1 <= i < j <= n");
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    std::swap(line[i - 1], line[j - 1]);
    return Perm(line);
}

std::vector<Perm> all_perms(int n, int bound) {
    if (n < 0) throw std::invalid_argument("negative strand count");
    if (n > bound || n > kMaxStrands)
        throw std::invalid_argument("strand count " + std::to_string(n) + " exceeds bound " +
                                    std::to_string(std::min(bound, kMaxStrands)));
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    std::vector<Perm> out;
    do {
        out.emplace_back(line);
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

// ---------------------------------------------------------------------------

SymmetricGroup::SymmetricGroup(int n) : n_(n), perms_(all_perms(n)) {
    const auto order = static_cast<std::uint32_t>(perms_.size());
    const std::size_t st = stride();
    length_.resize(order);
    right_.assign(order * st, 0);
    left_.assign(order * st, 0);
    parent_.assign(order, 0);
    last_.assign(order, 0);
    for (std::uint32_t r = 0; r < order; ++r) {
        const Perm& p = perms_[r];
        length_[r] = skein::length(p);
        for (int i = 1; i < n; ++i) {
            right_[r * st + i - 1] = rank(p.times_generator(i));
            left_[r * st + i - 1] = rank(p.generator_times(i));
        }
        if (r == 0) continue;
        int m = n;
        while (p(m) == m) --m;
        int k = 1;
        while (p(k) != m) ++k;
        last_[r] = k;
        parent_[r] = rank(p.times_generator(k));
    }
}

std::uint32_t SymmetricGroup::rank(const Perm& p) const {
    // Lehmer code in the factorial number system gives the lexicographic rank.
    std::uint32_t r = 0;
    const int n = p.size();
    for (int i = 1; i <= n; ++i) {
        std::uint32_t smaller = 0;
        for (int j = i + 1; j <= n; ++j)
            if (p(j) < p(i)) ++smaller;
        r = r * static_cast<std::uint32_t>(n - i + 1) + smaller;
    }
    return r;
}

const SymmetricGroup& SymmetricGroup::get(int n) {
    if (n < 0 || n > kMaxStrands)
        throw std::invalid_argument("strand count " + std::to_string(n) + " outside 0.." +
                                    std::to_string(kMaxStrands));
    static std::array<std::once_flag, kMaxStrands + 1> flags;
    static std::array<std::unique_ptr<SymmetricGroup>, kMaxStrands + 1> groups;
    std::call_once(flags[n], [n] { groups[n].reset(new SymmetricGroup(n)); });
    return *groups[n];
}

nlohmann::json to_json(const Perm& p) { return p.one_line(); }

Perm perm_from_json(const nlohmann::json& j) { return Perm(j.get<std::vector<int>>()); }

}  // namespace skein
