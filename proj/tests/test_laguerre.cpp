#include <gtest/gtest.h>

#include <cmath>

#include "tcdeg/laguerre.hpp"

using tcdeg::laguerre;

// Explicit sum L_n(x) = sum_k C(n, k) (-x)^k / k!, in long double.
static long double laguerre_sum(int n, long double x) {
    long double sum = 0.0L;
    long double binom = 1.0L;
    long double power = 1.0L;
    long double fact = 1.0L;
    for (int k = 0; k <= n; ++k) {
        sum += binom * power / fact;
        binom = binom * (n - k) / (k + 1);
        power *= -x;
        fact *= (k + 1);
    }
    return sum;
}

TEST(Laguerre, LowOrderClosedForms) {
    for (double x : {0.0, 0.3, 1.0, 2.5, 7.0}) {
        EXPECT_DOUBLE_EQ(laguerre(0, x), 1.0);
        EXPECT_NEAR(laguerre(1, x), 1.0 - x, 1e-15);
        EXPECT_NEAR(laguerre(2, x), (x * x - 4.0 * x + 2.0) / 2.0, 1e-14);
        EXPECT_NEAR(laguerre(3, x), (-x * x * x + 9.0 * x * x - 18.0 * x + 6.0) / 6.0, 1e-13);
    }
}

TEST(Laguerre, ReferenceValues) {
    EXPECT_NEAR(laguerre(3, 1.0), -2.0 / 3.0, 1e-15);
    EXPECT_NEAR(laguerre(2, 2.0), -1.0, 1e-15);
    EXPECT_DOUBLE_EQ(laguerre(25, 0.0), 1.0);
}

TEST(Laguerre, MatchesExplicitSum) {
    for (int n = 0; n <= 20; ++n) {
        for (double x : {0.01, 0.5, 1.0, 3.0, 6.0}) {
            const double expected = static_cast<double>(laguerre_sum(n, x));
            EXPECT_NEAR(laguerre(n, x), expected, 1e-10 * std::max(1.0, std::abs(expected)))
                << "n=" << n << " x=" << x;
        }
    }
}

TEST(Laguerre, BoundedByExpHalfX) {
    // |L_n(x)| <= exp(x / 2) for x >= 0.
    for (int n = 0; n <= 60; n += 3)
        for (double x = 0.0; x <= 30.0; x += 0.7) EXPECT_LE(std::abs(laguerre(n, x)), std::exp(x / 2.0) * (1 + 1e-12));
}

TEST(Laguerre, FloatInstantiation) {
    EXPECT_NEAR(laguerre(2, 2.0f), -1.0f, 1e-6f);
    EXPECT_NEAR(static_cast<double>(laguerre(3, 1.0L)), -2.0 / 3.0, 1e-15);
}

TEST(Laguerre, RejectsNegativeIndex) {
    EXPECT_THROW(laguerre(-1, 0.5), tcdeg::ConfigError);
}
