#include <gtest/gtest.h>

#include <eqsteenrod/grading.hpp>

namespace eqsteenrod {
namespace {

// Exact binomial via Pascal's triangle, reduced at the end.
bool pascal_parity(long n, long k)
{
    std::vector<std::vector<unsigned long long>> row(n + 1);
    for (long i = 0; i <= n; ++i) {
        row[i].assign(i + 1, 1);
        for (long j = 1; j < i; ++j)
            row[i][j] = (row[i - 1][j - 1] + row[i - 1][j]) & 1ULL;
    }
    return k >= 0 && k <= n && row[n][k] == 1;
}

TEST(Grading, GeneratorDegrees)
{
    EXPECT_EQ(degree_of_generator("tau_0"), (RODegree{1, 0}));
    EXPECT_EQ(degree_of_generator("xi_1"), (RODegree{1, 1}));
    EXPECT_EQ(degree_of_generator("a"), (RODegree{0, -1}));
    EXPECT_EQ(degree_of_generator("u"), (RODegree{1, -1}));
    EXPECT_EQ(degree_of_generator("tau_3"), (RODegree{8, 7}));
    EXPECT_EQ(degree_of_generator("xi_3"), (RODegree{7, 7}));
}

TEST(Grading, UnknownGenerator)
{
    EXPECT_THROW(degree_of_generator("xi_0"), UnknownGenerator);
    EXPECT_THROW(degree_of_generator("zeta_1"), UnknownGenerator);
    EXPECT_THROW(degree_of_generator("tau_"), UnknownGenerator);
    EXPECT_THROW(degree_of_generator("tau_x"), UnknownGenerator);
}

TEST(Grading, RhoIsAdditive)
{
    for (long i = -5; i <= 5; ++i)
        for (long j = -5; j <= 5; ++j)
            EXPECT_EQ(rho(i) + rho(j), rho(i + j));
    EXPECT_EQ((RODegree{} + RODegree{3, -2}), (RODegree{3, -2}));
}

TEST(Binomial, Examples)
{
    EXPECT_FALSE(binom_mod2(5, 2));
    EXPECT_TRUE(binom_mod2(-1, 3));
    EXPECT_TRUE(binom_mod2(6, 2));
    EXPECT_FALSE(binom_mod2(4, -1));
}

TEST(Binomial, AgreesWithPascal)
{
    for (long n = 0; n <= 64; ++n)
        for (long k = 0; k <= n; ++k)
            ASSERT_EQ(binom_mod2(n, k), pascal_parity(n, k)) << n << " " << k;
}

TEST(Binomial, Reflection)
{
    for (long n = -40; n < 0; ++n)
        for (long k = 0; k <= 64; ++k)
            ASSERT_EQ(binom_mod2(n, k), binom_mod2(k - n - 1, k));
}

// Negative upper arguments checked against the coefficients of (1+x)^n computed as a power of the
// geometric series 1/(1+x) = sum x^k.
TEST(Binomial, NegativeUpperMatchesSeriesExpansion)
{
    const int len = 40;
    std::vector<int> inv(len, 1);  // (1+x)^{-1} over F2
    std::vector<int> acc(len, 0);
    acc[0] = 1;
    for (int n = 1; n <= 12; ++n) {
        std::vector<int> next(len, 0);
        for (int i = 0; i < len; ++i)
            for (int j = 0; i + j < len; ++j)
                next[i + j] ^= acc[i] & inv[j];
        acc = next;
        for (int k = 0; k < len; ++k)
            ASSERT_EQ(binom_mod2(-n, k), acc[k] == 1) << -n << " " << k;
    }
}

TEST(Binomial, Vandermonde)
{
    for (long m = -8; m <= 8; ++m)
        for (long n = -8; n <= 8; ++n)
            for (long k = 0; k <= 12; ++k) {
                bool sum = false;
                for (long j = 0; j <= k; ++j)
                    sum ^= binom_mod2(m, j) && binom_mod2(n, k - j);
                ASSERT_EQ(binom_mod2(m + n, k), sum);
            }
}

}  // namespace
}  // namespace eqsteenrod
