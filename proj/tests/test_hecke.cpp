#include <gtest/gtest.h>

#include <map>
#include <random>

#include "skein/hecke.hpp"
#include "skein/verify.hpp"

using namespace skein;

namespace {

// A deliberately naive model of H_n: one-line vectors to coefficients, with
// right multiplication by generators written out from the quadratic relation.
using Naive = std::map<std::vector<int>, Scalar>;

int inversions(const std::vector<int>& p) {
    int c = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
    return c;
}

Naive naive_times_gen(const Naive& x, int i) {
    Naive out;
    for (const auto& [p, c] : x) {
        auto q = p;
        std::swap(q[i - 1], q[i]);
        out[q] += c;
        if (inversions(q) < inversions(p)) out[p] += c * sym::z();
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

// A reduced word by bubble sort: reading swaps backwards gives p.
std::vector<int> bubble_word(std::vector<int> p) {
    std::vector<int> swaps;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] > p[i + 1]) {
                std::swap(p[i], p[i + 1]);
                swaps.push_back(static_cast<int>(i) + 1);
                changed = true;
            }
    }
    return {swaps.rbegin(), swaps.rend()};
}

Naive naive_mul(const Naive& x, const Naive& y) {
    Naive out;
    for (const auto& [p, c] : y) {
        Naive t = x;
        for (int g : bubble_word(p)) t = naive_times_gen(t, g);
        for (const auto& [q, d] : t) out[q] += d * c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

Naive to_naive(const HeckeElt& x) {
    Naive out;
    for (const auto& [p, c] : x.terms()) out[p.one_line()] = c;
    return out;
}

HeckeElt sigma(int n, int i, int sign = 1) { return HeckeElt::generator(n, i, sign); }

}  // namespace

TEST(Hecke, QuadraticBraidAndFarCommutation) {
    const Scalar z = sym::z();
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i < n; ++i) {
            const HeckeElt a = sigma(n, i);
            EXPECT_EQ(a * a, a * z + HeckeElt::identity(n));
            EXPECT_EQ(a * sigma(n, i, -1), HeckeElt::identity(n));
            for (int j = i + 1; j < n; ++j) {
                const HeckeElt b = sigma(n, j);
                if (j == i + 1) EXPECT_EQ(a * b * a, b * a * b);
                else EXPECT_EQ(a * b, b * a);
            }
        }
}

TEST(Hecke, BasisElementsAreReducedWordProducts) {
    for (int n = 1; n <= 5; ++n)
        for (const Perm& p : all_perms(n)) {
            auto w = reduced_word(p);
            EXPECT_EQ(word_elt(n, w), HeckeElt::basis(p));
            // Any other reduced word gives the same braid.
            EXPECT_EQ(word_elt(n, bubble_word(p.one_line())), HeckeElt::basis(p));
        }
}

TEST(Hecke, ProductMatchesNaiveModel) {
    std::mt19937_64 rng(99);
    for (int n = 2; n <= 4; ++n)
        for (int trial = 0; trial < 15; ++trial) {
            HeckeElt x = random_element(n, rng, 5), y = random_element(n, rng, 5);
            EXPECT_EQ(to_naive(x * y), naive_mul(to_naive(x), to_naive(y)));
        }
}

TEST(Hecke, Associative) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        HeckeElt x = random_element(4, rng), y = random_element(4, rng), w = random_element(4, rng);
        EXPECT_EQ((x * y) * w, x * (y * w));
        EXPECT_EQ(x * (y + w), x * y + x * w);
    }
}

TEST(Hecke, LeftAndRightGeneratorActions) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        HeckeElt x = random_element(4, rng);
        for (int i = 1; i < 4; ++i)
            for (int sign : {1, -1}) {
                EXPECT_EQ(x.times_generator(i, sign), x * sigma(4, i, sign));
                EXPECT_EQ(x.generator_times(i, sign), sigma(4, i, sign) * x);
            }
    }
}

TEST(Hecke, ErrorsOnBadIndicesAndMismatch) {
    EXPECT_THROW(sigma(3, 3), std::invalid_argument);
    EXPECT_THROW(sigma(3, 0), std::invalid_argument);
    EXPECT_THROW(HeckeElt(9), std::invalid_argument);
    EXPECT_THROW(sigma(3, 1) * sigma(2, 1), std::invalid_argument);
    EXPECT_THROW(murphy_T(4, 3), std::invalid_argument);
    std::vector<int> bad{1, 0};
    EXPECT_THROW(word_elt(3, bad), std::invalid_argument);
}

TEST(Hecke, MurphyLinearForm) {
    const Scalar z = sym::z();
    EXPECT_EQ(murphy_T(1, 3), HeckeElt::identity(3));
    for (int n = 2; n <= 6; ++n)
        for (int j = 2; j <= n; ++j) EXPECT_EQ(murphy_T(j, n), HeckeElt::identity(n) + murphy_M(j, n) * z);
    // T(2) = sigma_1^2 = 1 + z sigma_1.
    EXPECT_EQ(murphy_T(2, 2), HeckeElt::identity(2) + sigma(2, 1) * z);
}

TEST(Hecke, MurphyOperatorsCommuteAndSymmetricSumsAreCentral) {
    for (int n = 2; n <= 5; ++n) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                EXPECT_EQ(murphy_T(i, n) * murphy_T(j, n), murphy_T(j, n) * murphy_T(i, n));
        for (int m = 1; m <= 3; ++m) EXPECT_TRUE(is_central(power_sum_T(m, n)));
    }
    EXPECT_FALSE(is_central(murphy_T(2, 3)));
    EXPECT_FALSE(is_central(sigma(3, 1)));
}

TEST(Hecke, EncirclingTangle) {
    const Scalar zv = sym::z() * sym::v().inv();
    EXPECT_EQ(t_circle(0), HeckeElt::scalar(0, sym::delta()));
    EXPECT_EQ(t_circle(1), HeckeElt::scalar(1, sym::delta() + zv));
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(t_circle(n), include(t_circle(n - 1), n) + murphy_T(n, n) * zv);
        EXPECT_TRUE(is_central(t_circle(n)));
    }
}

TEST(Hecke, SymmetrizerLadder) {
    const Scalar s = sym::s();
    EXPECT_EQ(gamma(2), HeckeElt::identity(2) + sigma(2, 1) * s);
    Scalar factorial = 1;
    for (int n = 1; n <= 5; ++n) {
        factorial *= quantum_int(n);
        const HeckeElt a = a_sym(n);
        // phi_s(a_n) = sum s^{2 l(pi)} = s^{n(n-1)/2} [n]!
        EXPECT_EQ(phi_s(a), s.pow(n * (n - 1) / 2) * factorial);
        EXPECT_EQ(a * a, a * phi_s(a));
        for (int i = 1; i < n; ++i) {
            EXPECT_EQ(a * sigma(n, i), a * s);
            EXPECT_EQ(sigma(n, i) * a, a * s);
        }
        const HeckeElt h = h_idem(n), e = e_idem(n);
        EXPECT_EQ(h * h, h);
        EXPECT_EQ(e * e, e);
        EXPECT_EQ(mirror(h), h);
        if (n >= 2) {
            EXPECT_EQ(a, include(a_sym(n - 1), n) * gamma(n));
            EXPECT_EQ(h * (s.pow(n - 1) * quantum_int(n)), include(h_idem(n - 1), n) * gamma(n));
            // Row and column idempotents are orthogonal.
            EXPECT_TRUE((h * e).is_zero());
        }
    }
}

TEST(Hecke, MirrorIsAnInvolutiveHomomorphism) {
    std::mt19937_64 rng(21);
    EXPECT_EQ(mirror(sigma(3, 2)), sigma(3, 2, -1));
    for (int trial = 0; trial < 10; ++trial) {
        HeckeElt x = random_element(4, rng), y = random_element(4, rng);
        EXPECT_EQ(mirror(mirror(x)), x);
        EXPECT_EQ(mirror(x * y), mirror(x) * mirror(y));
    }
}

TEST(Hecke, IncludeAndRescale) {
    HeckeElt x = sigma(2, 1) * sym::v();
    HeckeElt y = include(x, 4);
    EXPECT_EQ(y, sigma(4, 1) * sym::v());
    EXPECT_THROW(include(y, 3), std::invalid_argument);
    EXPECT_EQ(rescale(a_sym(3), sym::s().inv()), HeckeElt::from_rank_terms(3, [] {
                  std::vector<HeckeElt::RankTerm> t;
                  for (std::uint32_t r = 0; r < 6; ++r) t.emplace_back(r, Scalar(1));
                  return t;
              }()));
}

TEST(Hecke, MurphySeries) {
    for (int n = 1; n <= 4; ++n) {
        auto hm = murphy_series(n, 4);
        auto em = elem_murphy_series(n, 4);
        HeckeElt sum(n);
        for (int j = 1; j <= n; ++j) sum += murphy_T(j, n);
        EXPECT_EQ(hm[1], sum);
        EXPECT_EQ(em[1], sum);
        // HM(t) EM(-t) = 1
        auto product = hm * scale_t(em, Scalar(-1));
        EXPECT_EQ(product, TruncSeries<HeckeElt>::constant(HeckeElt::identity(n), 4));
        for (int k = 0; k <= 4; ++k) EXPECT_TRUE(is_central(hm[k]));
    }
}

TEST(Hecke, JsonRoundTripAndOrder) {
    std::mt19937_64 rng(2);
    HeckeElt x = random_element(3, rng);
    EXPECT_EQ(hecke_from_json(to_json(x)), x);
    auto j = to_json(HeckeElt::identity(2) + sigma(2, 1));
    EXPECT_EQ(j["n"], 2);
    EXPECT_EQ(j["terms"][0]["perm"].dump(), "[1,2]");
    EXPECT_EQ(j["terms"][1]["perm"].dump(), "[2,1]");
}
