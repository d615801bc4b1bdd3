#include <gtest/gtest.h>

#include <eqsteenrod/expr.hpp>
#include <eqsteenrod/suites.hpp>

namespace eqsteenrod {
namespace {

AlgElement P(const char* s) { return parse_element(s); }

std::string eval_text(PowerOps& ops, const std::string& e, long prec = 12) { return format(evaluate_expression(e, ops, prec)); }

TEST(Expr, Examples)
{
    PowerOps ops;
    EXPECT_EQ(eval_text(ops, "Q[2] tau_1"), "tau_2 + tau_0*xi_2");
    EXPECT_EQ(eval_text(ops, "Q[1,1] tau_0"), "xi_1");
    EXPECT_EQ(eval_text(ops, "Q[0] 1"), "1");
}

TEST(Expr, Binding)
{
    PowerOps ops;
    // the operation takes the following power only
    EXPECT_EQ(eval_text(ops, "Q[1] tau_0*xi_1"), format(ops.q_op(P("tau_0"), 1, 0) * P("xi_1")));
    EXPECT_EQ(eval_text(ops, "Q[1] (tau_0*xi_1)"), format(ops.q_op(P("tau_0*xi_1"), 1, 0)));
    EXPECT_EQ(eval_text(ops, "Q[2] Q[1] tau_0"), format(chi(P("tau_2"))));
    EXPECT_EQ(eval_text(ops, "chi(tau_1) + chi(tau_1)"), "0");
    EXPECT_EQ(eval_text(ops, "xi_1^2 + 0"), "xi_1^2");
}

TEST(Expr, SeriesAndTensor)
{
    PowerOps ops;
    EvalValue s = evaluate_expression("series(a)", ops, 6);
    ASSERT_TRUE(std::holds_alternative<STSeries>(s));
    EXPECT_EQ(std::get<STSeries>(s), STSeries::constant(AlgElement::a()).truncated(6, kExact));
    EvalValue z = evaluate_expression("psi(xi_1)", ops, 6);
    ASSERT_TRUE(std::holds_alternative<Tensor2>(z));
    EXPECT_EQ(std::get<Tensor2>(z), psi(P("xi_1")));
}

TEST(Expr, Errors)
{
    PowerOps ops;
    EXPECT_THROW(evaluate_expression("Q[1", ops, 6), ParseError);
    EXPECT_THROW(evaluate_expression("Q[1,2] tau_0", ops, 6), ParseError);
    EXPECT_THROW(evaluate_expression("tau_0 +", ops, 6), ParseError);
    EXPECT_THROW(evaluate_expression("foo", ops, 6), ParseError);
    EXPECT_THROW(evaluate_expression("xi_1 * psi(tau_0)", ops, 6), ParseError);
    try {
        evaluate_expression("tau_0 ) ", ops, 6);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position, 6u);
    }
}

TEST(Expr, RoundTrip)
{
    PowerOps ops;
    for (const auto& m : basis_in_box(kDefaultDegree, 8)) {
        AlgElement x(m);
        EvalValue v = evaluate_expression(format(x), ops, 4);
        ASSERT_TRUE(std::holds_alternative<AlgElement>(v));
        EXPECT_EQ(std::get<AlgElement>(v), x) << format(x);
    }
}

bool has_row(const std::vector<TableRow>& rows, long i, int eps, const AlgElement& v)
{
    for (const auto& r : rows)
        if (r.i == i && r.eps == eps)
            return r.value == v;
    return false;
}

TEST(Table, Tau0)
{
    PowerOps ops;
    auto rows = export_table(ops, P("tau_0"), 5);
    EXPECT_TRUE(has_row(rows, 1, 1, P("xi_1")));
    EXPECT_TRUE(has_row(rows, 1, 0, P("tau_1 + tau_0*xi_1")));
    EXPECT_TRUE(has_row(rows, 3, 0, chi(P("tau_2"))));
    for (const auto& r : rows)
        EXPECT_LT(r.i - r.eps, 5);
}

TEST(Table, Xi1AndA)
{
    PowerOps ops;
    for (const auto& r : export_table(ops, P("xi_1"), 8))
        if (r.eps == 1)
            EXPECT_TRUE(r.value.is_zero()) << r.i;
    int nonzero = 0;
    for (const auto& r : export_table(ops, P("a"), 8))
        if (!r.value.is_zero()) {
            ++nonzero;
            EXPECT_EQ(r.i, 0);
            EXPECT_EQ(r.eps, 0);
            EXPECT_EQ(r.value, P("a"));
        }
    EXPECT_EQ(nonzero, 1);
}

TEST(Report, DeterministicJson)
{
    SuiteConfig cfg;
    cfg.suites = {"action", "hopf", "norm-cartan", "generation"};
    cfg.precision = 6;
    EXPECT_EQ(to_json(run_suites(cfg)).dump(), to_json(run_suites(cfg)).dump());
}

TEST(Report, DegenerateAndBadConfig)
{
    SuiteConfig cfg;
    cfg.suites = {"action"};
    cfg.precision = 2;
    RunReport rep = run_suites(cfg);
    EXPECT_TRUE(rep.pass);
    EXPECT_FALSE(rep.suites.at(0).cases.empty());

    SuiteConfig bad;
    bad.suites = {"bogus"};
    EXPECT_THROW(run_suites(bad), std::invalid_argument);
    bad.suites = {};
    bad.precision = 1;
    EXPECT_THROW(run_suites(bad), std::invalid_argument);
}

TEST(Report, JsonSchema)
{
    SuiteConfig cfg;
    cfg.suites = {"generation"};
    auto j = to_json(run_suites(cfg));
    ASSERT_TRUE(j.contains("config"));
    ASSERT_TRUE(j.contains("pass"));
    ASSERT_TRUE(j["suites"].is_array());
    for (const auto& s : j["suites"]) {
        EXPECT_TRUE(s.contains("name"));
        EXPECT_TRUE(s.contains("pass"));
        for (const auto& c : s["cases"]) {
            EXPECT_TRUE(c.contains("input"));
            EXPECT_TRUE(c.contains("got"));
            EXPECT_TRUE(c.contains("pass"));
        }
    }
}

}  // namespace
}  // namespace eqsteenrod
