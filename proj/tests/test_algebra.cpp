#include <gtest/gtest.h>

#include <map>
#include <random>
#include <string>

#include <eqsteenrod/algebra.hpp>
#include <eqsteenrod/algebra_io.hpp>

namespace eqsteenrod {
namespace {

AlgElement P(const char* s) { return parse_element(s); }

// Brute-force rewriting: monomials are exponent maps over generator names with unrestricted
// tau exponents; tau_i^2 is rewritten one occurrence at a time in a random order.
using RawMono = std::map<std::string, int>;
using RawPoly = std::map<RawMono, int>;

void raw_add(RawPoly& p, const RawMono& m)
{
    RawMono clean;
    for (auto [g, e] : m)
        if (e)
            clean[g] = e;
    if ((p[clean] ^= 1) == 0)
        p.erase(clean);
}

RawPoly raw_reduce(RawPoly p, std::mt19937& rng)
{
    for (;;) {
        std::vector<std::pair<RawMono, std::string>> redexes;
        for (const auto& [m, c] : p)
            for (const auto& [g, e] : m)
                if (g.rfind("tau_", 0) == 0 && e >= 2)
                    redexes.push_back({m, g});
        if (redexes.empty())
            return p;
        auto [m, g] = redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng)];
        raw_add(p, m);  // remove
        int i = std::stoi(g.substr(4));
        RawMono base = m;
        base[g] -= 2;
        std::string xi_next = "xi_" + std::to_string(i + 1);
        RawMono t1 = base;
        t1["u"]++;
        t1[xi_next]++;
        RawMono t2 = base;
        t2["a"]++;
        t2["tau_0"]++;
        t2[xi_next]++;
        RawMono t3 = base;
        t3["a"]++;
        t3["tau_" + std::to_string(i + 1)]++;
        raw_add(p, t1);
        raw_add(p, t2);
        raw_add(p, t3);
    }
}

AlgElement raw_to_element(const RawPoly& p)
{
    std::string text;
    for (const auto& [m, c] : p) {
        std::string term = "1";
        for (auto [g, e] : m)
            term += "*" + g + "^" + std::to_string(e);
        text += (text.empty() ? "" : " + ") + term;
    }
    // every exponent of tau here is 0 or 1, so parsing does not rewrite anything
    return text.empty() ? AlgElement{} : P(text.c_str());
}

RawMono raw_of(const GenMonomial& m)
{
    RawMono r;
    r["u"] = m.u;
    r["a"] = m.a;
    for (int i = 1; i <= kMaxIndex; ++i)
        r["xi_" + std::to_string(i)] = m.xi_exp(i);
    for (int i = 0; i <= kMaxIndex; ++i)
        r["tau_" + std::to_string(i)] = m.has_tau(i);
    return r;
}

TEST(Algebra, TauSquared)
{
    EXPECT_EQ(AlgElement::tau(0) * AlgElement::tau(0), P("u*xi_1 + a*tau_0*xi_1 + a*tau_1"));
}

TEST(Algebra, Unit)
{
    AlgElement x = P("u*tau_1 + a^3*xi_2");
    EXPECT_EQ(AlgElement::one() * x, x);
    EXPECT_EQ(x * AlgElement::one(), x);
}

TEST(Algebra, NestedRelation)
{
    AlgElement expected = P("u*tau_0*xi_2 + a*u*xi_1*xi_2 + a^2*tau_0*xi_1*xi_2 + a^2*tau_1*xi_2 + a*tau_0*tau_2");
    EXPECT_EQ((AlgElement::tau(0) * AlgElement::tau(1)) * AlgElement::tau(1), expected);

    // independent oracle
    std::mt19937 rng(7);
    RawPoly p;
    raw_add(p, {{"tau_0", 1}, {"tau_1", 2}});
    EXPECT_EQ(raw_to_element(raw_reduce(p, rng)), expected);
}

TEST(Algebra, ConfluenceUnderRandomRewriteOrder)
{
    std::mt19937 rng(2024);
    auto basis = basis_in_box({5, 5}, 3);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
        const GenMonomial& x = basis[pick(rng)];
        const GenMonomial& y = basis[pick(rng)];
        RawMono prod = raw_of(x);
        for (auto [g, e] : raw_of(y))
            prod[g] += e;
        RawPoly p;
        raw_add(p, prod);
        AlgElement first = raw_to_element(raw_reduce(p, rng));
        AlgElement second = raw_to_element(raw_reduce(p, rng));
        EXPECT_EQ(first, second);
        EXPECT_EQ(AlgElement(x) * AlgElement(y), first) << format(x) << " * " << format(y);
    }
}

TEST(Algebra, Degree)
{
    auto d = P("tau_0*xi_1").degree();
    ASSERT_TRUE(d.homogeneous());
    EXPECT_EQ(d.degree, (RODegree{2, 1}));
    EXPECT_EQ(P("u*a").degree().degree, (RODegree{1, -2}));
    EXPECT_EQ(AlgElement{}.degree().kind, DegreeInfo::Kind::Zero);
    EXPECT_EQ(P("u + a").degree().kind, DegreeInfo::Kind::Inhomogeneous);
}

TEST(Algebra, RelationIsHomogeneous)
{
    for (int i = 0; i < 8; ++i) {
        AlgElement rhs = (AlgElement::u() + AlgElement::a() * AlgElement::tau(0)) * AlgElement::xi(i + 1) +
                         AlgElement::a() * AlgElement::tau(i + 1);
        auto d = rhs.degree();
        ASSERT_TRUE(d.homogeneous());
        long two = 1L << (i + 1);
        EXPECT_EQ(d.degree, (RODegree{two, two - 2}));
        EXPECT_EQ(GenMonomial::of({GenKind::Tau, i}).degree() + GenMonomial::of({GenKind::Tau, i}).degree(), d.degree);
    }
}

TEST(Algebra, BasisInDegree)
{
    auto b = basis_in_degree({1, 0}, 2);
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(AlgElement(b[0]) + AlgElement(b[1]), P("tau_0 + a*xi_1"));
    b = basis_in_degree({0, 0}, 2);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_TRUE(b[0].is_one());
    b = basis_in_degree({1, 1}, 2);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(AlgElement(b[0]), AlgElement::xi(1));
}

// Brute force: every monomial with bounded exponents, filtered by degree.
TEST(Algebra, BasisMatchesBruteForce)
{
    for (long f = 0; f <= 4; ++f)
        for (long s = -4; s <= 4; ++s) {
            std::vector<GenMonomial> brute;
            for (int p = 0; p <= 4; ++p)
                for (int q = 0; q <= 8; ++q)
                    for (int e1 = 0; e1 <= 4; ++e1)
                        for (int e2 = 0; e2 <= 1; ++e2)
                            for (unsigned tau = 0; tau < 8; ++tau) {
                                GenMonomial m;
                                m.u = p;
                                m.a = q;
                                m.xi[0] = e1;
                                m.xi[1] = e2;
                                m.tau = tau;
                                if (m.degree() == RODegree{f, s})
                                    brute.push_back(m);
                            }
            std::sort(brute.begin(), brute.end());
            EXPECT_EQ(basis_in_degree({f, s}, 2), brute) << f << "," << s;
        }
}

TEST(Algebra, RingAxiomsOnBasis)
{
    auto basis = basis_in_box({4, 3}, 2);
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
        AlgElement x(basis[pick(rng)]), y(basis[pick(rng)]), z(basis[pick(rng)]);
        ASSERT_EQ(x * y, y * x);
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(x * (y + z), x * y + x * z);
        auto dxy = (x * y).degree();
        if (!(x * y).is_zero()) {
            ASSERT_TRUE(dxy.homogeneous());
            EXPECT_EQ(dxy.degree, x.degree().degree + y.degree().degree);
        }
    }
}

TEST(Algebra, MonomialOrder)
{
    // tau sets compare as ascending index lists
    GenMonomial t0 = GenMonomial::of({GenKind::Tau, 0}), t1 = GenMonomial::of({GenKind::Tau, 1});
    GenMonomial t01 = t0;
    t01.tau |= t1.tau;
    EXPECT_TRUE(GenMonomial{} < t0);
    EXPECT_TRUE(t0 < t01);
    EXPECT_TRUE(t01 < t1);
    EXPECT_FALSE(t1 < t01);
    EXPECT_EQ(format(P("tau_0*xi_2 + tau_2")), "tau_2 + tau_0*xi_2");
}

TEST(AlgebraIO, FormatParseRoundTrip)
{
    for (const auto& m : basis_in_box({6, 6}, 3)) {
        AlgElement x(m);
        ASSERT_EQ(parse_element(format(x)), x);
        ASSERT_EQ(element_from_json(to_json(x)), x);
    }
    AlgElement y = P("u*tau_0 + a^2*xi_1^3*tau_2 + 1");
    EXPECT_EQ(parse_element(format(y)), y);
    EXPECT_EQ(element_from_json(to_json(y)), y);
}

TEST(AlgebraIO, ParseErrors)
{
    try {
        parse_element("tau_0 + * xi_1");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position, 8u);
    }
    EXPECT_THROW(parse_element("zeta_1"), ParseError);
    EXPECT_THROW(parse_element("(tau_0"), ParseError);
    EXPECT_THROW(parse_element("tau_0 tau_1"), ParseError);
}

}  // namespace
}  // namespace eqsteenrod
