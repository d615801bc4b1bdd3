#include <gtest/gtest.h>

#include <eqsteenrod/hopf.hpp>

namespace eqsteenrod {
namespace {

AlgElement P(const char* s) { return parse_element(s); }
Tensor2 T(const char* l, const char* r) { return Tensor2::of({P(l), P(r)}); }

TEST(Hopf, RightUnit)
{
    EXPECT_EQ(eta_R(P("a")), P("a"));
    EXPECT_EQ(eta_R(P("u")), P("u + a*tau_0"));
    EXPECT_EQ(eta_R(P("u^2")), P("u^2 + a^2*u*xi_1 + a^3*tau_0*xi_1 + a^3*tau_1"));
    EXPECT_THROW(eta_R(P("tau_0")), std::invalid_argument);
}

TEST(Hopf, TensorGathersScalarsLeft)
{
    // 1 (x) u = eta_R(u) (x) 1
    EXPECT_EQ(T("1", "u"), T("u + a*tau_0", "1"));
    EXPECT_EQ(T("1", "a*xi_1"), T("a", "xi_1"));
    // 1 (x) tau_0^2 uses the relation and then gathers
    EXPECT_EQ(T("1", "tau_0") * T("1", "tau_0"), T("1", "u*xi_1 + a*tau_0*xi_1 + a*tau_1"));
}

TEST(Hopf, CoproductExamples)
{
    EXPECT_EQ(psi(P("xi_1")), T("xi_1", "1") + T("1", "xi_1"));
    EXPECT_EQ(psi(P("tau_0")), T("tau_0", "1") + T("1", "tau_0"));
    EXPECT_EQ(psi(P("tau_1")), T("tau_1", "1") + T("1", "tau_1") + T("xi_1", "tau_0"));
    EXPECT_EQ(psi(P("u")), T("u", "1"));
}

TEST(Hopf, CoproductRespectsRelation)
{
    for (int i = 0; i <= 6; ++i) {
        Tensor2 lhs = psi(AlgElement::tau(i)) * psi(AlgElement::tau(i));
        Tensor2 rhs = psi(AlgElement::tau(i) * AlgElement::tau(i));
        EXPECT_EQ(lhs, rhs) << i;
    }
}

TEST(Hopf, CoassociativeAndCounital)
{
    std::vector<AlgElement> gens{AlgElement::u(), AlgElement::a()};
    for (int i = 0; i <= 5; ++i) {
        gens.push_back(AlgElement::tau(i));
        if (i)
            gens.push_back(AlgElement::xi(i));
    }
    for (const auto& g : gens) {
        Tensor2 z = psi(g);
        EXPECT_EQ(psi_then_left(z), psi_then_right(z)) << format(g);
        EXPECT_EQ(counit_left(z), g) << format(g);
        EXPECT_EQ(counit_right(z), g) << format(g);
    }
}

TEST(Hopf, CoproductIsMultiplicative)
{
    auto basis = basis_in_box({4, 3}, 2);
    for (std::size_t k = 0; k + 1 < basis.size(); k += 3) {
        AlgElement x(basis[k]), y(basis[k + 1]);
        EXPECT_EQ(psi(x * y), psi(x) * psi(y)) << format(x) << " " << format(y);
    }
}

TEST(Hopf, AntipodeExamples)
{
    EXPECT_EQ(chi(P("xi_1")), P("xi_1"));
    EXPECT_EQ(chi(P("tau_0")), P("tau_0"));
    EXPECT_EQ(chi(P("tau_1")), P("tau_1 + tau_0*xi_1"));
    EXPECT_EQ(chi(P("xi_2")), P("xi_2 + xi_1^3"));
    EXPECT_EQ(chi(P("u")), P("u + a*tau_0"));
}

TEST(Hopf, AntipodeAxioms)
{
    // m(chi (x) 1) psi = eta_R eps on generators
    for (int i = 0; i <= 5; ++i) {
        EXPECT_TRUE(chi_multiply(psi(AlgElement::tau(i))).is_zero());
        if (i)
            EXPECT_TRUE(chi_multiply(psi(AlgElement::xi(i))).is_zero());
    }
    EXPECT_EQ(chi_multiply(psi(P("u"))), eta_R(P("u")));
    for (const auto& m : basis_in_box({6, 6}, 8)) {
        AlgElement x(m);
        ASSERT_EQ(chi(chi(x)), x) << format(x);
    }
    auto basis = basis_in_box({4, 4}, 2);
    for (std::size_t k = 0; k + 1 < basis.size(); k += 2)
        EXPECT_EQ(chi(AlgElement(basis[k]) * AlgElement(basis[k + 1])), chi(AlgElement(basis[k])) * chi(AlgElement(basis[k + 1])));
}

TEST(Hopf, ConjugateXiMatchesAntipode)
{
    STSeries g = conj_xi(17);
    for (int i = 1; i <= 4; ++i)
        EXPECT_EQ(g.coefficient({0, 0, 0, 1L << i}), chi(AlgElement::xi(i))) << i;
    EXPECT_EQ(g.coefficient({0, 0, 0, 3}), AlgElement{});
    EXPECT_EQ(g.coefficient({0, 0, 0, 1}), AlgElement::one());
    // xi(conj_xi(t)) = t
    Assignment<AlgElement> sub;
    sub.t = g;
    STSeries composite = substitute(xi_series(17), sub);
    EXPECT_TRUE(composite.agrees_with(STSeries::var_t()));
    EXPECT_GE(composite.t_prec(), 17);
}

}  // namespace
}  // namespace eqsteenrod
