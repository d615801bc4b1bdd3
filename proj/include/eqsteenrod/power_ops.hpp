#pragma once

// Total power operation Q(s,t) on the dual Steenrod algebra.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "algebra.hpp"
#include "algebra_io.hpp"
#include "hopf.hpp"
#include "series.hpp"

namespace eqsteenrod {

/// Q(s,t)c = c + d s t^{-1} and Q(s,t)d = d + d^2 t^{-1}.
inline STSeries q_of_c() { return STSeries::var_c() + STSeries::monomial({0, 1, 1, -1}, AlgElement::one()); }
inline STSeries q_of_d() { return STSeries::var_d() + STSeries::monomial({0, 0, 2, -1}, AlgElement::one()); }

/// Values of Q(s,t) on a and u forced by c^2 = ac + ud.
struct ForcedValues {
    STSeries q_a;
    STSeries q_u;
    STSeries residual;  // Q(c)^2 - Q(a) Q(c) - Q(u) Q(d); zero when consistent
    bool consistent = false;
    bool unique = false;
};

/// Solve Q(c)^2 = alpha Q(c) + beta Q(d) for alpha = Q(a), beta = Q(u) in A((s,t)).
///
/// The map (alpha, beta) -> alpha Q(c) + beta Q(d) is triangular: its c d^0 part is alpha and its
/// c^0 d^1 part is beta + alpha s t^{-1}. So the solution is read off those two parts and is unique.
inline ForcedValues solve_forced_values()
{
    STSeries qc = q_of_c(), qd = q_of_d();
    STSeries lhs = qc * qc;
    ForcedValues out;
    STSeries alpha, beta_plus;
    for (const auto& [m, x] : lhs.terms()) {
        if (m.c == 1 && m.d == 0)
            alpha.add_term({0, m.s, 0, m.t}, x);
        if (m.c == 0 && m.d == 1)
            beta_plus.add_term({0, m.s, 0, m.t}, x);
    }
    STSeries st_inv = STSeries::monomial({0, 1, 0, -1}, AlgElement::one());
    out.q_a = alpha;
    out.q_u = beta_plus + alpha * st_inv;
    out.residual = lhs + out.q_a * qc + out.q_u * qd;
    out.consistent = out.residual.is_zero();

    // triangularity: Q(c) has c-coefficient 1 at d^0 and Q(d) has no c part, no d^0 part, d^1 coefficient 1
    bool qc_unit = qc.coefficient({1, 0, 0, 0}).is_one();
    bool qd_shape = qd.coefficient({0, 0, 1, 0}).is_one();
    for (const auto& [m, x] : qd.terms())
        qd_shape = qd_shape && m.c == 0 && m.d >= 1;
    for (const auto& [m, x] : qc.terms())
        qc_unit = qc_unit && (m.c == 1 ? m.d == 0 && m.t == 0 && m.s == 0 : m.d >= 1);
    out.unique = qc_unit && qd_shape;
    out.q_a.tighten_floors();
    out.q_u.tighten_floors();
    return out;
}

/// Table of Q(s,t) on generators, each entry known modulo t^precision.
struct TotalOpTable {
    long precision = 0;
    STSeries q_u, q_a;
    std::vector<STSeries> q_tau;  // index n
    std::vector<STSeries> q_xi;   // index n; q_xi[0] = 1
    STSeries beyond;              // entry for generators of index past the table: zero below t^precision

    int top_index() const { return int(q_tau.size()) - 1; }

    const STSeries& of(Generator g) const
    {
        switch (g.kind) {
        case GenKind::U:
            return q_u;
        case GenKind::A:
            return q_a;
        case GenKind::Tau:
            return g.index < int(q_tau.size()) ? q_tau[g.index] : beyond;
        case GenKind::Xi:
            return g.index < int(q_xi.size()) ? q_xi[g.index] : beyond;
        }
        return beyond;
    }
};

class InconsistentSystem : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

    // Coefficient of d^m (c-free part) as a series in s,t.
    inline STSeries d_level(const STSeries& f, long m)
    {
        STSeries r = STSeries::zero(f.t_prec());
        for (const auto& [k, x] : f.terms())
            if (k.c == 0 && k.d == m)
                r.add_term({0, k.s, 0, k.t}, x);
        r.tighten_floors();
        return r;
    }

    inline STSeries c_level(const STSeries& f)
    {
        STSeries r = STSeries::zero(f.t_prec());
        for (const auto& [k, x] : f.terms())
            if (k.c == 1 && k.d == 0)
                r.add_term({0, k.s, 0, k.t}, x);
        r.tighten_floors();
        return r;
    }

    inline STSeries in_cd(const STSeries& st_series) { return swap_variables(st_series); }

    // xi(t)^{-1} known modulo t^prec
    inline STSeries xi_inverse(long prec) { return xi_series(prec + 2).invert().truncated(prec); }

    inline int top_index_for(long precision)
    {
        int n = 0;
        while ((1L << (n + 1)) <= precision)
            ++n;
        return n;
    }

}  // namespace detail

/// Solve both master identities for Q(s,t) tau_n and Q(s,t) xi_n, one power of d at a time.
///
/// Entries are produced for every n with 2^n <= precision; past that, Q(s,t) of the generator is
/// zero below t^precision and the table hands out an empty entry with that floor.
inline TotalOpTable build_table_recursive(long precision)
{
    if (precision < 2)
        throw std::invalid_argument("table precision must be at least 2");
    const int top = detail::top_index_for(precision);
    const long p0 = precision + (1L << top) - 1;  // precision needed for the n = 0 entry
    const long d_range = (1L << (top + 1)) + 1;
    auto level_prec = [&](int k) { return precision + (1L << top) - (1L << k); };

    TotalOpTable table;
    table.precision = precision;
    ForcedValues forced = solve_forced_values();
    if (!forced.consistent || !forced.unique)
        throw InconsistentSystem("no unique solution for Q(a), Q(u)");
    table.q_a = forced.q_a;
    table.q_u = forced.q_u;
    table.beyond = STSeries::zero(precision);

    STSeries xi_inv = detail::xi_inverse(p0);
    STSeries tau_st = tau_series(p0 + 2);
    STSeries st_inv = STSeries::monomial({0, 1, 0, -1}, AlgElement::one());

    // tau identity: tau(c,d) + xi(d) tau(s,t) xi(t)^{-1}
    STSeries lhs_tau = detail::in_cd(tau_series(d_range)) + detail::in_cd(xi_series(d_range)) * (tau_st * xi_inv).truncated(p0);
    // xi identity: xi(d) + xi(d)^2 xi(t)^{-1}
    STSeries xi_d = detail::in_cd(xi_series(d_range));
    STSeries lhs_xi = xi_d + (xi_d * xi_d).truncated(kExact, d_range) * xi_inv;

    std::vector<STSeries> full_tau, full_xi;  // entries before truncation to the table precision
    for (int k = 0; k <= top; ++k) {
        long m = 1L << k;
        STSeries qt = detail::d_level(lhs_tau, m);
        STSeries qx = detail::d_level(lhs_xi, m);
        if (k == 0) {
            qt += st_inv;
        } else {
            qt += full_tau[k - 1].shifted(0, -(m / 2));
            qx += full_xi[k - 1].shifted(0, -(m / 2));
        }
        qt.truncate(level_prec(k));
        qx.truncate(level_prec(k));
        qt.tighten_floors();
        qx.tighten_floors();
        full_tau.push_back(qt);
        full_xi.push_back(qx);
    }

    // recheck every d-level of both identities, and the c-level of the first
    auto entry = [&](const std::vector<STSeries>& full, long n) -> STSeries {
        return n < long(full.size()) ? full[n] : table.beyond;
    };
    std::string failures;
    if (!detail::c_level(lhs_tau).agrees_with(STSeries::one()))
        failures += " tau identity at c;";
    for (long m = 0; m < d_range; ++m) {
        STSeries rt = STSeries::zero(kExact), rx = STSeries::zero(kExact);
        if (m == 1)
            rt += st_inv;
        for (long n = 0; (1L << n) <= m; ++n) {
            if ((1L << n) == m) {
                rt += entry(full_tau, n);
                rx += entry(full_xi, n);
            }
            if ((2L << n) == m) {
                rt += entry(full_tau, n).shifted(0, -(1L << n));
                rx += entry(full_xi, n).shifted(0, -(1L << n));
            }
        }
        if (!rt.agrees_with(detail::d_level(lhs_tau, m)))
            failures += " tau identity at d^" + std::to_string(m) + ";";
        if (!rx.agrees_with(detail::d_level(lhs_xi, m)))
            failures += " xi identity at d^" + std::to_string(m) + ";";
    }
    if (!failures.empty())
        throw InconsistentSystem("master identities fail after solving:" + failures);

    for (int k = 0; k <= top; ++k) {
        table.q_tau.push_back(full_tau[k].truncated(precision));
        table.q_xi.push_back(full_xi[k].truncated(precision));
        table.q_tau.back().tighten_floors();
        table.q_xi.back().tighten_floors();
    }
    return table;
}

namespace detail {

    // sum_{i >= from} coeff(i) t^{2^i}, known modulo t^prec
    template <class Fn>
    STSeries power_sum(int from, long prec, Fn&& coeff)
    {
        STSeries r = STSeries::zero(prec);
        for (int i = from; (1L << i) < prec; ++i)
            r.add_term({0, 0, 0, 1L << i}, coeff(i));
        r.tighten_floors();
        return r;
    }

}  // namespace detail

/// Q(s,t) tau_n from the closed form: s t^{-2^n} xi^{-1} X + t^{-2^n} (T + (tau(s,t)+s) xi^{-1} X),
/// X = sum_{i>n} xi_i t^{2^i}, T = sum_{i>n} tau_i t^{2^i}.
inline STSeries closed_form_tau(int n, long precision)
{
    long shift = 1L << n;
    long wide = precision + shift + 1;
    STSeries x = detail::power_sum(n + 1, wide, [](int i) { return AlgElement::xi(i); });
    STSeries tt = detail::power_sum(n + 1, wide, [](int i) { return AlgElement::tau(i); });
    STSeries tau_plus_s = detail::power_sum(0, wide, [](int i) { return AlgElement::tau(i); });
    STSeries xi_inv = detail::xi_inverse(std::max(2L, precision - shift + 1));
    STSeries q = (xi_inv * x).truncated(precision + shift);
    STSeries out = (STSeries::var_s() * q + tt + tau_plus_s * q).shifted(0, -shift);
    out.truncate(precision);
    out.tighten_floors();
    return out;
}

/// Q(s,t) xi_n from the closed form: t^{-2^n} (X + xi^{-1} sum_{i>=n} xi_i^2 t^{2^{i+1}}).
inline STSeries closed_form_xi(int n, long precision)
{
    long shift = 1L << n;
    long wide = precision + shift + 1;
    STSeries x = detail::power_sum(n + 1, wide, [](int i) { return AlgElement::xi(i); });
    STSeries sq = detail::power_sum(n + 1, wide, [](int i) { return AlgElement::xi(i - 1) * AlgElement::xi(i - 1); });
    STSeries xi_inv = detail::xi_inverse(std::max(2L, precision - shift + 2));
    STSeries out = (x + (xi_inv * sq).truncated(precision + shift)).shifted(0, -shift);
    out.truncate(precision);
    out.tighten_floors();
    return out;
}

/// Evaluation of Q(s,t) with tables and per-monomial results cached across calls.
class PowerOps {
public:
    PowerOps() = default;

    /// Table known modulo t^p for some p >= precision (grown on demand).
    const TotalOpTable& table(long precision)
    {
        precision = std::max(precision, 2L);
        if (!table_ || table_->precision < precision) {
            long grown = table_ ? std::max(precision, table_->precision + table_->precision / 2) : precision;
            table_ = std::make_unique<TotalOpTable>(build_table_recursive(grown));
        }
        return *table_;
    }

    /// Q(s,t) on a monomial, modulo t^n.
    STSeries q_total(const GenMonomial& m, long n)
    {
        auto it = cache_.find(m);
        if (it == cache_.end() || it->second.t_prec() < n) {
            STSeries value = evaluate(m, n);
            it = cache_.insert_or_assign(m, std::move(value)).first;
        }
        return it->second.truncated(n);
    }

    /// Q(s,t) x modulo t^n; additive in x.
    STSeries q_total(const AlgElement& x, long n)
    {
        STSeries r = STSeries::zero(n);
        for (const auto& m : x.terms())
            r += q_total(m, n);
        r.tighten_floors();
        return r;
    }

    /// Q^{i rho - eps} x, the coefficient of s^eps t^{i - eps}.
    AlgElement q_op(const AlgElement& x, long i, int eps) { return q_total(x, std::max(i - eps + 1, 2L)).extract(i, eps); }

    /// Ring homomorphism A((c,d)) -> A((c,s,d,t)) applying Q(s,t) to coefficients; F may not use s or t
    /// and its d-exponents must be nonnegative. Coefficients are evaluated modulo t^n.
    STSeries q_extended(const STSeries& f, long n)
    {
        for (const auto& [m, x] : f.terms()) {
            if (m.s || m.t)
                throw std::invalid_argument("q_extended expects a series in c and d");
            if (m.d < 0)
                throw std::invalid_argument("q_extended needs nonnegative powers of d");
        }
        Assignment<AlgElement> sub;
        sub.c = q_of_c();
        sub.d = q_of_d();
        return substitute(f, sub, [&](const AlgElement& y) { return q_total(y, n); });
    }

    std::size_t cache_size() const { return cache_.size(); }

private:
    std::unique_ptr<TotalOpTable> table_;
    std::unordered_map<GenMonomial, STSeries, GenMonomialHash> cache_;

    STSeries evaluate(const GenMonomial& m, long n)
    {
        // each factor Q(u) lowers the precision by one; all other entries have nonnegative floors
        const TotalOpTable& tab = table(n + m.u);
        STSeries r = STSeries::one();
        auto times = [&](const STSeries& f, int e) {
            for (int k = 0; k < e; ++k)
                r = r * f;
        };
        times(tab.q_u, m.u);
        times(tab.q_a, m.a);
        for (int i = 1; i <= kMaxIndex; ++i)
            times(tab.of({GenKind::Xi, i}), m.xi_exp(i));
        for (int i = 0; i <= kMaxIndex; ++i)
            if (m.has_tau(i))
                r = r * tab.of({GenKind::Tau, i});
        if (r.t_prec() < n)
            throw PrecisionError("Q(s,t) " + format(m) + " reached only t^" + std::to_string(r.t_prec()));
        r.tighten_floors();
        return r;
    }
};

}  // namespace eqsteenrod
