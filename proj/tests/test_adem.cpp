#include <gtest/gtest.h>

#include <eqsteenrod/adem.hpp>

namespace eqsteenrod {
namespace {

TEST(Adem, SymmetrySmallBox)
{
    PowerOps ops;
    for (const auto& m : basis_in_box({3, 3}, 4)) {
        AdemSymmetryResult r = adem_symmetry_check(ops, AlgElement(m), 12);
        EXPECT_TRUE(r.pass) << format(r.x);
        EXPECT_GE(r.box, 6);
    }
    // the comparison is not vacuous
    EXPECT_GT(adem_symmetry_check(ops, AlgElement::tau(1), 12).compared, 10);
}

TEST(Adem, SymmetryDetectsBrokenSeries)
{
    // Q(s,t) applied to c,d but not to the coefficients: the swap symmetry must fail
    PowerOps ops;
    STSeries inner = swap_variables(ops.q_total(AlgElement::tau(0), 6));
    Assignment<AlgElement> sub;
    sub.c = q_of_c();
    sub.d = q_of_d();
    STSeries g = substitute(
                     inner.shifted(1, 0).truncated(kExact, 7), sub, [](const AlgElement& y) { return STSeries::constant(y); },
                     /*check_relations=*/false)
                     .shifted(-1, 1);
    bool symmetric = true;
    long box = std::min(g.t_prec(), g.d_prec());
    for (const auto& [k, y] : g.terms())
        if (k.t < box && k.d < box && g.coefficient({k.s, k.c, k.t, k.d}) != y)
            symmetric = false;
    EXPECT_FALSE(symmetric);
}

TEST(Adem, ExplicitFamiliesSmallScan)
{
    PowerOps ops;
    AdemScanReport rep = adem_scan(ops, 4, {2, 2}, 8);
    EXPECT_TRUE(rep.family_holds(AdemFamily::PlusPlus, false));
    EXPECT_TRUE(rep.family_holds(AdemFamily::MinusPlus, false));
    EXPECT_TRUE(rep.family_holds(AdemFamily::PlusMinus, false));
    EXPECT_TRUE(rep.family_holds(AdemFamily::MinusMinusShifted, false));
    EXPECT_FALSE(rep.flagged().empty());
}

TEST(Adem, PrintedMinusMinusCounterexample)
{
    // Q^{2rho-1}Q^{-1}(u a tau_0) = 0, while the printed sum gives Q^{rho-1}Q^{rho-1}(u a tau_0) = a^2 xi_1^2
    PowerOps ops;
    CompositeEvaluator ev(ops);
    AlgElement x = parse_element("u*a*tau_0");
    EXPECT_TRUE(ev.eval(adem_lhs(AdemFamily::MinusMinus, 2, 0), x).is_zero());
    EXPECT_EQ(ev.eval(adem_rhs(AdemFamily::MinusMinus, 2, 0), x), parse_element("a^2*xi_1^2"));
    EXPECT_TRUE(ev.eval(adem_rhs(AdemFamily::MinusMinusShifted, 2, 0), x).is_zero());
}

}  // namespace
}  // namespace eqsteenrod
