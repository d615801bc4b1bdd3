#pragma once

// Formal norm / transfer / restriction calculus on free symbols x_0, x_1, ...
// x_i names the underlying class Q^i x; w is the underlying variable with N(w) = t.

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <vector>

namespace eqsteenrod {

/// Commutative monomial in the symbols x_i, stored as a sorted multiset of indices.
struct SymMonomial {
    std::vector<int> idx;

    static SymMonomial x(int i) { return {{i}}; }
    SymMonomial operator*(const SymMonomial& o) const
    {
        SymMonomial r;
        std::merge(idx.begin(), idx.end(), o.idx.begin(), o.idx.end(), std::back_inserter(r.idx));
        return r;
    }
    SymMonomial squared() const { return *this * *this; }
    friend auto operator<=>(const SymMonomial&, const SymMonomial&) = default;
};

inline std::string format(const SymMonomial& m)
{
    if (m.idx.empty())
        return "1";
    std::string out;
    for (std::size_t k = 0; k < m.idx.size();) {
        std::size_t e = k;
        while (e < m.idx.size() && m.idx[e] == m.idx[k])
            ++e;
        if (!out.empty())
            out += "*";
        out += "x" + std::to_string(m.idx[k]);
        if (e - k > 1)
            out += "^" + std::to_string(e - k);
        k = e;
    }
    return out;
}

enum class NormKind { Norm, Transfer };

/// N(m) s^eps t^k or tr(m) s^eps t^k.
struct NormTerm {
    NormKind kind = NormKind::Norm;
    SymMonomial m;
    int s = 0;
    long t = 0;
    friend auto operator<=>(const NormTerm&, const NormTerm&) = default;
};

/// F2-combination of norm and transfer terms.
class NormExpr {
public:
    NormExpr() = default;
    static NormExpr term(NormTerm t)
    {
        NormExpr e;
        e.terms_.insert(std::move(t));
        return e;
    }
    static NormExpr norm(const SymMonomial& m, long tk = 0) { return term({NormKind::Norm, m, 0, tk}); }
    static NormExpr transfer(const SymMonomial& m, int s = 0, long tk = 0) { return term({NormKind::Transfer, m, s, tk}); }

    NormExpr& operator+=(const NormExpr& o)
    {
        for (const auto& t : o.terms_)
            if (!terms_.erase(t))
                terms_.insert(t);
        return *this;
    }
    friend NormExpr operator+(NormExpr a, const NormExpr& b) { return a += b; }
    friend bool operator==(const NormExpr&, const NormExpr&) = default;

    const std::set<NormTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of s^eps t^k, as an expression with s = t = 0 exponents.
    NormExpr coefficient(int eps, long k) const
    {
        NormExpr r;
        for (const auto& t : terms_)
            if (t.s == eps && t.t == k)
                r += term({t.kind, t.m, 0, 0});
        return r;
    }

private:
    std::set<NormTerm> terms_;
};

inline std::string format(const NormExpr& e)
{
    if (e.is_zero())
        return "0";
    std::string out;
    for (const auto& t : e.terms()) {
        if (!out.empty())
            out += " + ";
        out += (t.kind == NormKind::Norm ? "N(" : "tr(") + format(t.m) + ")";
        if (t.s)
            out += "*s";
        if (t.t)
            out += "*t" + (t.t == 1 ? std::string() : "^" + std::to_string(t.t));
    }
    return out;
}

/// tr(m w^k) in terms of tr(m): w^{2j} = res(t^j) moves out by Frobenius reciprocity, and the one
/// leftover w is recorded as s.
inline NormExpr transfer_with_w(const SymMonomial& m, long k) { return NormExpr::transfer(m, int(k % 2), k / 2); }

/// Norm of a sum of underlying terms m_k w^{e_k} by the distributive law:
/// N(sum y_k) = sum N(y_k) + sum_{k<l} tr(y_k y_l), with N(m w^e) = N(m) t^e.
inline NormExpr norm_of_sum(const std::vector<std::pair<SymMonomial, long>>& ys)
{
    NormExpr out;
    for (std::size_t k = 0; k < ys.size(); ++k) {
        out += NormExpr::norm(ys[k].first, ys[k].second);
        for (std::size_t l = k + 1; l < ys.size(); ++l)
            out += transfer_with_w(ys[k].first * ys[l].first, ys[k].second + ys[l].second);
    }
    return out;
}

/// N(Q(w)x) = N(sum_{i<=range} x_i w^i).
inline NormExpr norm_expand(int range_max)
{
    std::vector<std::pair<SymMonomial, long>> ys;
    for (int i = 0; i <= range_max; ++i)
        ys.push_back({SymMonomial::x(i), i});
    return norm_of_sum(ys);
}

/// The norm part of the explicit Cartan formula, written down directly.
inline NormExpr norm_cartan_expected(int range_max, int eps, long n)
{
    NormExpr r;
    long total = eps ? 2 * n - 1 : 2 * n;
    if (!eps && n <= range_max)
        r += NormExpr::norm(SymMonomial::x(int(n)));
    for (long i = 0; i <= range_max; ++i) {
        long j = total - i;
        if (i < j && j <= range_max)
            r += NormExpr::transfer(SymMonomial::x(int(i)) * SymMonomial::x(int(j)));
    }
    return r;
}

/// t^n and s t^{n-1} coefficients of norm_expand against the formula, for 2n <= 2 range_max.
inline bool match_norm_cartan(int range_max)
{
    NormExpr e = norm_expand(range_max);
    for (long n = 0; n <= range_max; ++n) {
        if (e.coefficient(0, n) != norm_cartan_expected(range_max, 0, n))
            return false;
        if (n >= 1 && e.coefficient(1, n - 1) != norm_cartan_expected(range_max, 1, n))
            return false;
    }
    // nothing outside those coefficients
    for (const auto& t : e.terms())
        if (t.t + t.s > range_max)
            return false;
    return true;
}

// ---------------------------------------------------------------------------------------------
// restriction rules

/// Underlying value of a norm or transfer atom (s = t = 0): res N(m) = m^2, res tr(m) = m + m = 0.
/// Returns the multiset of underlying monomials, empty for zero.
inline std::vector<SymMonomial> res(const NormTerm& a)
{
    if (a.kind == NormKind::Norm)
        return {a.m.squared()};
    return {};
}

/// N(m') tr(m) = tr(res(N(m')) m) = tr(m'^2 m).
inline NormExpr norm_times_transfer(const SymMonomial& mp, const SymMonomial& m)
{
    auto r = res(NormTerm{NormKind::Norm, mp, 0, 0});
    NormExpr out;
    for (const auto& z : r)
        out += NormExpr::transfer(z * m);
    return out;
}

struct ResRuleCheck {
    std::string rule;
    bool pass = false;
};

/// Small identities on atoms: restriction of norms and transfers, Frobenius reciprocity,
/// and multiplicativity of the w-conversion.
inline std::vector<ResRuleCheck> res_rules(int range_max = 4)
{
    std::vector<ResRuleCheck> out;
    auto x = SymMonomial::x;
    for (int i = 0; i <= range_max; ++i) {
        auto r = res(NormTerm{NormKind::Norm, x(i), 0, 0});
        out.push_back({"res N(x" + std::to_string(i) + ") = x" + std::to_string(i) + "^2",
                       r.size() == 1 && r[0] == x(i) * x(i)});
        for (int j = i + 1; j <= range_max; ++j) {
            out.push_back({"res tr(x" + std::to_string(i) + "*x" + std::to_string(j) + ") = 0",
                           res(NormTerm{NormKind::Transfer, x(i) * x(j), 0, 0}).empty()});
            out.push_back({"N(x" + std::to_string(i) + ")*tr(x" + std::to_string(j) + ") = tr(x" + std::to_string(i) +
                               "^2*x" + std::to_string(j) + ")",
                           norm_times_transfer(x(i), x(j)) == NormExpr::transfer(x(i) * x(i) * x(j))});
        }
    }
    // <w^{2m}> <w^{2m'}> = <w^{2(m+m')}>: t-exponents add, no s appears
    for (long m = 0; m <= range_max; ++m)
        for (long mp = 0; mp <= range_max; ++mp) {
            NormTerm a = *transfer_with_w({}, 2 * m).terms().begin();
            NormTerm b = *transfer_with_w({}, 2 * mp).terms().begin();
            NormTerm c = *transfer_with_w({}, 2 * (m + mp)).terms().begin();
            out.push_back({"<w^" + std::to_string(2 * m) + "><w^" + std::to_string(2 * mp) + ">",
                           a.s == 0 && b.s == 0 && c.s == 0 && a.t + b.t == c.t});
        }
    return out;
}

}  // namespace eqsteenrod
