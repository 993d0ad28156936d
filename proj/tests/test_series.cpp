#include <gtest/gtest.h>

#include "skein/series.hpp"

using namespace skein;

namespace {

TruncSeries<Scalar> series(std::vector<Scalar> c) { return TruncSeries<Scalar>(std::move(c)); }

TruncSeries<Scalar> one(int order) { return TruncSeries<Scalar>::constant(1, order); }

}  // namespace

TEST(Series, GeometricInverse) {
    const Scalar x = sym::s();
    // (1 - x t)^{-1} = sum x^k t^k
    auto inv = inverse(series({1, -x, 0, 0, 0, 0}));
    for (int k = 0; k <= 5; ++k) EXPECT_EQ(inv[k], x.pow(k));
}

TEST(Series, InverseTimesSelfIsOne) {
    const Scalar v = sym::v(), s = sym::s();
    auto f = series({v, s, v * s, Scalar(3), s.inv(), v + s});
    EXPECT_EQ(f * inverse(f), one(5));
    EXPECT_THROW(inverse(series({0, 1})), SeriesError);
}

TEST(Series, LogOfOnePlusT) {
    // log(1 + t) = t - t^2/2 + t^3/3 - ...
    auto L = log(series({1, 1, 0, 0, 0}));
    EXPECT_EQ(L[0], Scalar(0));
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(L[k], Scalar::rational(k % 2 ? 1 : -1, k));
}

TEST(Series, ExpLogRoundTrip) {
    const Scalar v = sym::v(), s = sym::s();
    auto f = series({1, v, s * s, v - s, Scalar(7), s.inv(), v * v});
    EXPECT_EQ(exp(log(f)), f);
    auto g = series({0, s, v, Scalar::rational(1, 3), v * s});
    EXPECT_EQ(log(exp(g)), g);
    EXPECT_THROW(log(series({2, 1})), SeriesError);
    EXPECT_THROW(exp(series({1, 1})), SeriesError);
}

TEST(Series, ExpIsAHomomorphism) {
    const Scalar v = sym::v(), s = sym::s();
    auto f = series({0, v, s, 0, 1});
    auto g = series({0, s, 0, v, v});
    EXPECT_EQ(exp(f + g), exp(f) * exp(g));
}

TEST(Series, ScaleT) {
    const Scalar c = sym::v();
    auto f = series({1, 1, 1, 1});
    auto g = scale_t(f, c);
    for (int k = 0; k <= 3; ++k) EXPECT_EQ(g[k], c.pow(k));
}

TEST(Series, TruncationAndMixedOrders) {
    auto f = series({1, 2, 3, 4});
    auto g = series({1, 1});
    EXPECT_EQ((f * g).order(), 1);
    EXPECT_EQ(f.truncated(2).order(), 2);
    EXPECT_THROW(f.truncated(5), SeriesError);
    EXPECT_THROW(TruncSeries<Scalar>(std::vector<Scalar>{}), SeriesError);
}

TEST(Series, Json) {
    auto j = series({1, 0}).to_json();
    EXPECT_EQ(j["algebra"], "scalar");
    EXPECT_EQ(j["coeffs"].size(), 2u);
}
