#include <gtest/gtest.h>

#include <eqsteenrod/mackey.hpp>

namespace eqsteenrod {
namespace {

auto x = SymMonomial::x;

TEST(Mackey, NormExpandExamples)
{
    EXPECT_EQ(norm_expand(0), NormExpr::norm(x(0)));
    EXPECT_EQ(norm_expand(1), NormExpr::norm(x(0)) + NormExpr::norm(x(1), 1) + NormExpr::transfer(x(0) * x(1), 1));
    NormExpr e = norm_expand(2);
    EXPECT_EQ(e.coefficient(0, 2), NormExpr::norm(x(2)));
    EXPECT_EQ(e.coefficient(1, 1), NormExpr::transfer(x(1) * x(2)));
}

TEST(Mackey, MatchesCartan)
{
    for (int r = 0; r <= 8; ++r)
        EXPECT_TRUE(match_norm_cartan(r)) << r;
}

TEST(Mackey, StableUnderRangeExtension)
{
    for (int r = 1; r <= 8; ++r) {
        NormExpr diff = norm_expand(r) + norm_expand(r - 1);
        for (const auto& t : diff.terms())
            EXPECT_TRUE(std::find(t.m.idx.begin(), t.m.idx.end(), r) != t.m.idx.end()) << format(diff);
    }
}

TEST(Mackey, ResRules)
{
    auto checks = res_rules();
    EXPECT_FALSE(checks.empty());
    for (const auto& c : checks)
        EXPECT_TRUE(c.pass) << c.rule;
    EXPECT_EQ(norm_times_transfer(x(0), x(1)), NormExpr::transfer(x(0) * x(0) * x(1)));
    EXPECT_EQ(format(NormExpr::transfer(x(0) * x(0) * x(1), 1, 2)), "tr(x0^2*x1)*s*t^2");
}

}  // namespace
}  // namespace eqsteenrod
