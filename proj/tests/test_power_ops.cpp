#include <gtest/gtest.h>

#include <eqsteenrod/power_ops.hpp>

namespace eqsteenrod {
namespace {

AlgElement P(const char* s) { return parse_element(s); }

TEST(PowerOps, ForcedValues)
{
    ForcedValues f = solve_forced_values();
    EXPECT_TRUE(f.consistent);
    EXPECT_TRUE(f.unique);
    EXPECT_EQ(f.q_a, STSeries::constant(AlgElement::a()));
    EXPECT_EQ(f.q_u, STSeries::constant(AlgElement::u()) + STSeries::monomial({0, 1, 0, -1}, AlgElement::a()));
}

TEST(PowerOps, LowOperations)
{
    PowerOps ops;
    EXPECT_EQ(ops.q_op(P("tau_0"), 1, 0), P("tau_1 + tau_0*xi_1"));
    EXPECT_EQ(ops.q_op(P("tau_0"), 1, 1), P("xi_1"));
    EXPECT_EQ(ops.q_op(P("tau_1"), 2, 0), P("tau_2 + tau_0*xi_2"));
    EXPECT_EQ(ops.q_op(P("xi_1"), 1, 0), P("xi_1^2"));
    EXPECT_TRUE(ops.q_op(P("tau_0"), 0, 0).is_zero());  // below the vanishing line
    EXPECT_EQ(ops.q_op(P("u"), 0, 0), P("u"));
    EXPECT_EQ(ops.q_op(P("u"), 0, 1), P("a"));
}

TEST(PowerOps, RecursionMatchesClosedForm)
{
    TotalOpTable tab = build_table_recursive(17);
    ASSERT_EQ(tab.top_index(), 4);
    for (int n = 0; n <= 4; ++n) {
        EXPECT_EQ(tab.q_tau[n], closed_form_tau(n, 17)) << n;
        EXPECT_EQ(tab.q_xi[n], closed_form_xi(n, 17)) << n;
        EXPECT_GE(tab.q_tau[n].t_floor(), (1L << n) - 1) << n;
        EXPECT_GE(tab.q_xi[n].t_floor(), (1L << n) - 1) << n;
    }
    EXPECT_EQ(tab.q_xi[0], STSeries::one().truncated(17));
}

TEST(PowerOps, ExtendedRespectsRelation)
{
    PowerOps ops;
    STSeries c = STSeries::var_c(), d = STSeries::var_d();
    STSeries lhs = ops.q_extended(c * c, 8);
    STSeries rhs = ops.q_extended(STSeries::constant(AlgElement::a()) * c + STSeries::constant(AlgElement::u()) * d, 8);
    EXPECT_TRUE(lhs.agrees_with(rhs));
    STSeries qc = ops.q_extended(c, 8);
    EXPECT_TRUE(qc.agrees_with(q_of_c()));
}

TEST(PowerOps, Multiplicative)
{
    PowerOps ops;
    auto basis = basis_in_box({4, 4}, 3);
    for (std::size_t k = 0; k + 1 < basis.size(); k += 5) {
        AlgElement x(basis[k]), y(basis[k + 1]);
        STSeries lhs = ops.q_total(x * y, 9);
        STSeries rhs = ops.q_total(x, 12) * ops.q_total(y, 12);
        EXPECT_TRUE(lhs.agrees_with(rhs)) << format(x) << " " << format(y);
    }
}

}  // namespace
}  // namespace eqsteenrod
