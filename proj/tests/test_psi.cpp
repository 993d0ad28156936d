#include <gtest/gtest.h>

#include <random>

#include "skein/psi.hpp"
#include "skein/repn.hpp"
#include "skein/trace.hpp"

using namespace skein;

namespace {

Scalar weight(int m) { return (sym::s().pow(m) - sym::s().pow(-m)) * sym::v().pow(-m); }

}  // namespace

TEST(Psi, Examples) {
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(psi(n, SymFunc::constant(1)), HeckeElt::identity(n));
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(psi(n, h(1)), t_circle(n));
    EXPECT_EQ(psi(0, h(2) * h(1)), HeckeElt::scalar(0, ev_sym(h(2) * h(1))));
    EXPECT_EQ(psi(0, h(3)), HeckeElt::scalar(0, ev_sym(h(3))));
}

TEST(Psi, ImagesAreCentral) {
    const std::vector<SymFunc> fs{h(1),         h(2),         h(3),
                                  power_sum(2), power_sum(3), elementary(2),
                                  schur(Partition{2, 1})};
    for (int n = 1; n <= 4; ++n)
        for (const auto& f : fs) EXPECT_TRUE(is_central(psi(n, f)));
}

TEST(Psi, Homomorphism) {
    const std::vector<SymFunc> fs{h(1), h(2) - h(1) * h(1), elementary(2) * sym::v(), power_sum(2)};
    for (int n = 1; n <= 3; ++n)
        for (const auto& f : fs)
            for (const auto& g : fs) EXPECT_EQ(psi(n, f * g), psi(n, f) * psi(n, g));
}

TEST(Psi, PowerSumTelescoping) {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            const PowerSumPoly pm = PowerSumPoly::generator(m);
            EXPECT_EQ(psi(n, pm) - include(psi(n - 1, pm), n), pow(murphy_T(n, n), m) * weight(m))
                << "m=" << m << " n=" << n;
        }
}

TEST(Psi, EigenvaluesMatchContentSums) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : partitions(n)) {
            EXPECT_TRUE(psi_eigen_check(n, SymFunc::constant(1), l));
            EXPECT_TRUE(psi_eigen_check(n, power_sum(2), l));
            EXPECT_TRUE(psi_eigen_check(n, h(2), l));
        }
    EXPECT_EQ(central_scalar(psi(1, power_sum(1)), Partition{1}), sym::delta() + sym::z() * sym::v().inv());
    EXPECT_THROW(psi_eigen_check(2, h(1), Partition{1}), std::invalid_argument);
}

TEST(MurphySeries, DegreeOneByHand) {
    // psi_n(h_1) = psi_0(h_1) + (s v^-1 - s^-1 v^-1) sum_j T(j)
    const Scalar c = (sym::s() - sym::s().inv()) * sym::v().inv();
    for (int n = 1; n <= 4; ++n) {
        HeckeElt sum(n);
        for (int j = 1; j <= n; ++j) sum += murphy_T(j, n);
        EXPECT_EQ(psi(n, h(1)), HeckeElt::scalar(n, ev_sym(h(1))) + sum * c);
    }
}

TEST(MurphySeries, HoldsThroughDegreeFour) {
    for (int n = 1; n <= 4; ++n) {
        auto report = verify_murphy_series(n, 4);
        ASSERT_EQ(report.degrees.size(), 5u);
        EXPECT_TRUE(report.passed()) << "n=" << n;
    }
}
