#pragma once

// Symmetric-group combinatorics: one-line permutations, Coxeter length,
// canonical reduced words and the coset normal form used by the Markov trace.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

namespace skein {

/// Upper bound on strand counts throughout the library (8! = 40320).
inline constexpr int kMaxStrands = 8;

/// A permutation of {1..n} in one-line notation.  Strand labels are 1-based
/// in the public interface.
class Perm {
public:
    Perm() = default;
    /// Validates that `one_line` is a bijection of {1..n}.
    explicit Perm(std::span<const int> one_line);
    Perm(std::initializer_list<int> one_line);

    static Perm identity(int n);

    int size() const noexcept { return n_; }
    /// Image of strand i (1-based).
    int operator()(int i) const { return img_[i - 1]; }
    std::vector<int> one_line() const;

    /// this * s_i, i.e. positions i and i+1 of the one-line form swapped.
    Perm times_generator(int i) const;
    /// s_i * this, i.e. values i and i+1 swapped.
    Perm generator_times(int i) const;

    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::array<std::uint8_t, kMaxStrands> img_{};
    std::uint8_t n_ = 0;
};

/// Function composition: compose(a, b)(i) = a(b(i)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);

/// Inversion count.
int length(const Perm& a);

/// Canonical reduced word (generator indices, 1-based), built by peeling the
/// top strand with coset_decompose.  Its product s_{w1} ... s_{wk} is `a`.
std::vector<int> reduced_word(const Perm& a);

/// Product of adjacent transpositions s_{w1} s_{w2} ... in S_n.
Perm word_product(int n, std::span<const int> word);

/// The transposition (i j) in S_n, 1 <= i < j <= n.
Perm transposition(int i, int j, int n);

/// Writes a = u * s_{n-1} s_{n-2} ... s_k with u fixing n.
struct CosetForm {
    Perm u;                // in S_{n-1}
    std::optional<int> k;  // empty when a fixes n
};
CosetForm coset_decompose(const Perm& a);

/// All permutations of S_n in lexicographic order of one-line notation.
std::vector<Perm> all_perms(int n, int bound = kMaxStrands);

/// Precomputed multiplication tables for S_n, indexed by the lexicographic
/// rank of the one-line form.  Shared, immutable, built once per n.
class SymmetricGroup {
public:
    static const SymmetricGroup& get(int n);

    int degree() const noexcept { return n_; }
    std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(perms_.size()); }
    const Perm& perm(std::uint32_t r) const { return perms_[r]; }
    std::uint32_t rank(const Perm& p) const;
    int length(std::uint32_t r) const { return length_[r]; }
    /// Rank of perm(r) * s_i.
    std::uint32_t right(std::uint32_t r, int i) const { return right_[r * stride() + i - 1]; }
    /// Rank of s_i * perm(r).
    std::uint32_t left(std::uint32_t r, int i) const { return left_[r * stride() + i - 1]; }
    /// Canonical word of perm(r) minus its last letter, and that letter.
    /// Undefined for the identity (rank 0).
    std::uint32_t word_parent(std::uint32_t r) const { return parent_[r]; }
    int word_last(std::uint32_t r) const { return last_[r]; }

private:
    explicit SymmetricGroup(int n);
    std::size_t stride() const { return n_ > 1 ? static_cast<std::size_t>(n_ - 1) : 1; }

    int n_;
    std::vector<Perm> perms_;
    std::vector<int> length_;
    std::vector<std::uint32_t> right_;
    std::vector<std::uint32_t> left_;
    std::vector<std::uint32_t> parent_;
    std::vector<int> last_;
};

/// Walks the trie of canonical reduced words down to every rank in `targets`,
/// carrying a value along each edge.  The value at the identity is `init`; a
/// child's value is step(parent_value, generator).  visit(rank, value) is
/// called once for each target.  The canonical words are prefix closed, so
/// every product is built from its parent with a single step.
template <class Value, class Step, class Visit>
void walk_canonical_words(const SymmetricGroup& group, std::span<const std::uint32_t> targets,
                          Value init, Step&& step, Visit&& visit) {
    const std::uint32_t order = group.order();
    std::vector<std::uint8_t> needed(order, 0);  // 1 = on a path, 2 = target
    for (auto r : targets) {
        needed[r] |= 2;
        for (std::uint32_t x = r; x != 0 && !(needed[x] & 1);) {
            needed[x] |= 1;
            x = group.word_parent(x);
        }
    }
    needed[0] |= 1;
    std::vector<std::vector<std::uint32_t>> children(order);
    for (std::uint32_t r = 1; r < order; ++r)
        if (needed[r] & 1) children[group.word_parent(r)].push_back(r);

    // Explicit stack: (rank, value).
    std::vector<std::pair<std::uint32_t, Value>> stack;
    stack.emplace_back(0, std::move(init));
    while (!stack.empty()) {
        auto [r, value] = std::move(stack.back());
        stack.pop_back();
        if (needed[r] & 2) visit(r, value);
        const auto& kids = children[r];
        for (std::size_t c = 0; c < kids.size(); ++c) {
            if (c + 1 == kids.size())
                stack.emplace_back(kids[c], step(std::move(value), group.word_last(kids[c])));
            else
                stack.emplace_back(kids[c], step(Value(value), group.word_last(kids[c])));
        }
    }
}

nlohmann::json to_json(const Perm& p);
Perm perm_from_json(const nlohmann::json& j);

}  // namespace skein
