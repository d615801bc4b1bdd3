#pragma once

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace eqsteenrod {

class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sentinel precision for exactly known series.
inline constexpr long kExact = 1L << 40;

namespace detail {
    inline long sat_add(long x, long y)
    {
        if (x >= kExact || y >= kExact)
            return kExact;
        return std::min(x + y, kExact);
    }
}  // namespace detail

/// Operations a coefficient ring must provide for the series rings.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<AlgElement> {
    static AlgElement zero() { return {}; }
    static AlgElement one() { return AlgElement::one(); }
    static bool is_zero(const AlgElement& x) { return x.is_zero(); }
    // x * u^p * a^q, where u and a are the classes in the relation s^2 = as + ut
    static AlgElement scalar_mul(const AlgElement& x, int p, int q) { return x.times_scalar(p, q); }
    static AlgElement u() { return AlgElement::u(); }
    static AlgElement a() { return AlgElement::a(); }
};

/// Basis monomial c^c s^s d^d t^t with c, s in {0,1}.
struct STMonomial {
    int c = 0;
    int s = 0;
    long d = 0;
    long t = 0;

    friend bool operator==(const STMonomial&, const STMonomial&) = default;
    friend bool operator<(const STMonomial& x, const STMonomial& y)
    {
        if (x.t != y.t)
            return x.t < y.t;
        if (x.d != y.d)
            return x.d < y.d;
        if (x.s != y.s)
            return x.s < y.s;
        return x.c < y.c;
    }
};

/// Series in A((c,s,d,t)) with c^2 = ac + ud and s^2 = as + ut.
///
/// Terms with t < t_prec and d < d_prec are known exactly; every other term is unknown.
/// The floors bound the exponents of all terms, known or not; they drive precision propagation
/// through products.
template <class C>
class Series {
public:
    using Coeff = C;
    using Traits = CoeffTraits<C>;
    using TermMap = std::map<STMonomial, C>;

    Series() = default;  // exact zero

    static Series zero(long t_prec = kExact, long d_prec = kExact)
    {
        Series r;
        r.tp_ = t_prec;
        r.dp_ = d_prec;
        r.tf_ = t_prec;
        r.df_ = 0;
        return r;
    }
    static Series constant(const C& x) { return monomial({}, x); }
    static Series one() { return constant(Traits::one()); }
    static Series monomial(STMonomial m, const C& x)
    {
        Series r;
        if (!Traits::is_zero(x))
            r.terms_.emplace(m, x);
        r.tf_ = m.t;
        r.df_ = m.d;
        r.tp_ = r.dp_ = kExact;
        return r;
    }
    static Series var_c() { return monomial({1, 0, 0, 0}, Traits::one()); }
    static Series var_s() { return monomial({0, 1, 0, 0}, Traits::one()); }
    static Series var_d(long k = 1) { return monomial({0, 0, k, 0}, Traits::one()); }
    static Series var_t(long k = 1) { return monomial({0, 0, 0, k}, Traits::one()); }

    const TermMap& terms() const { return terms_; }
    long t_prec() const { return tp_; }
    long d_prec() const { return dp_; }
    long t_floor() const { return std::min(tf_, tp_); }
    long d_floor() const { return df_; }
    bool is_exact() const { return tp_ >= kExact && dp_ >= kExact; }
    bool is_zero() const { return terms_.empty(); }

    // Whether m lies in the known region.
    bool known(const STMonomial& m) const { return m.t < tp_ && m.d < dp_; }

    bool uses_cd() const
    {
        return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.c || kv.first.d; });
    }

    /// Coefficient of a basis monomial; throws when it lies outside the known region.
    C coefficient(const STMonomial& m) const
    {
        if (!known(m))
            throw PrecisionError("coefficient at t^" + std::to_string(m.t) + " d^" + std::to_string(m.d) +
                                 " lies beyond the series precision (t < " + std::to_string(tp_) + ", d < " +
                                 std::to_string(dp_) + ")");
        auto it = terms_.find(m);
        return it == terms_.end() ? Traits::zero() : it->second;
    }

    /// Coefficient of s^eps t^(i - eps), the i-th entry of the eps family.
    C extract(long i, int eps) const
    {
        if (uses_cd())
            throw std::invalid_argument("extract expects a series in s and t only");
        return coefficient({0, eps, 0, i - eps});
    }

    void truncate(long t_prec, long d_prec = kExact)
    {
        tp_ = std::min(tp_, t_prec);
        dp_ = std::min(dp_, d_prec);
        for (auto it = terms_.begin(); it != terms_.end();)
            it = known(it->first) ? std::next(it) : terms_.erase(it);
    }
    Series truncated(long t_prec, long d_prec = kExact) const
    {
        Series r = *this;
        r.truncate(t_prec, d_prec);
        return r;
    }

    // Add x at m (F2 accumulation); ignored when m is outside the known region.
    void add_term(const STMonomial& m, const C& x)
    {
        if (!known(m) || Traits::is_zero(x))
            return;
        tf_ = std::min(tf_, m.t);
        df_ = std::min(df_, m.d);
        auto [it, fresh] = terms_.try_emplace(m, x);
        if (!fresh) {
            it->second += x;
            if (Traits::is_zero(it->second))
                terms_.erase(it);
        }
    }

    Series& operator+=(const Series& g)
    {
        tp_ = std::min(tp_, g.tp_);
        dp_ = std::min(dp_, g.dp_);
        tf_ = std::min(tf_, g.tf_);
        df_ = std::min(df_, g.df_);
        for (auto it = terms_.begin(); it != terms_.end();)
            it = known(it->first) ? std::next(it) : terms_.erase(it);
        for (const auto& [m, x] : g.terms_)
            add_term(m, x);
        return *this;
    }
    friend Series operator+(Series f, const Series& g) { return f += g; }
    friend Series operator-(Series f, const Series& g) { return f += g; }

    friend Series operator*(const Series& f, const Series& g)
    {
        Series r;
        r.tp_ = std::min(detail::sat_add(f.tp_, g.t_floor()), detail::sat_add(g.tp_, f.t_floor()));
        r.dp_ = std::min(detail::sat_add(f.dp_, g.df_), detail::sat_add(g.dp_, f.df_));
        r.tf_ = f.t_floor() + g.t_floor();
        r.df_ = f.df_ + g.df_;
        if (r.tf_ > r.tp_)
            r.tf_ = r.tp_;
        struct Piece {
            int p, q;
            STMonomial m;
        };
        for (const auto& [m1, x1] : f.terms_) {
            for (const auto& [m2, x2] : g.terms_) {
                STMonomial base{m1.c + m2.c, m1.s + m2.s, m1.d + m2.d, m1.t + m2.t};
                // reductions only raise exponents
                if (!r.known(base))
                    continue;
                Piece pieces[4];
                int n = 0;
                pieces[n++] = {0, 0, base};
                if (base.c == 2) {
                    // c^2 = a c + u d
                    pieces[0] = {0, 1, {1, base.s, base.d, base.t}};
                    pieces[n++] = {1, 0, {0, base.s, base.d + 1, base.t}};
                }
                if (base.s == 2) {
                    int k = n;
                    for (int j = 0; j < k; ++j) {
                        Piece p = pieces[j];
                        pieces[j] = {p.p, p.q + 1, {p.m.c, 1, p.m.d, p.m.t}};
                        pieces[n++] = {p.p + 1, p.q, {p.m.c, 0, p.m.d, p.m.t + 1}};
                    }
                }
                C prod = x1 * x2;
                if (Traits::is_zero(prod))
                    continue;
                for (int j = 0; j < n; ++j)
                    r.add_term(pieces[j].m, (pieces[j].p || pieces[j].q) ? Traits::scalar_mul(prod, pieces[j].p, pieces[j].q) : prod);
            }
        }
        return r;
    }
    Series& operator*=(const Series& g) { return *this = *this * g; }

    Series scaled(const C& x) const { return *this * constant(x); }

    // Multiply by d^dd t^dt exactly.
    Series shifted(long dd, long dt) const
    {
        Series r;
        r.tp_ = tp_ >= kExact ? kExact : tp_ + dt;
        r.dp_ = dp_ >= kExact ? kExact : dp_ + dd;
        r.tf_ = t_floor() + dt;
        r.df_ = df_ + dd;
        for (const auto& [m, x] : terms_)
            r.terms_.emplace(STMonomial{m.c, m.s, m.d + dd, m.t + dt}, x);
        return r;
    }

    Series pow(long n) const
    {
        if (n < 0)
            return invert().pow(-n);
        Series result = one(), base = *this;
        while (n) {
            if (n & 1)
                result *= base;
            n >>= 1;
            if (n)
                base *= base;
        }
        return result;
    }

    /// Inverse of t^k (1 + R) with R of positive t-order and no c or d part.
    Series invert() const
    {
        if (terms_.empty())
            throw std::domain_error("cannot invert a series with no known terms");
        if (uses_cd())
            throw std::domain_error("invert expects a series in s and t only");
        const auto& [lead, lead_coeff] = *terms_.begin();
        if (lead.s != 0 || !(lead_coeff == Traits::one()))
            throw std::domain_error("leading term is not a unit times a power of t");
        for (const auto& [m, x] : terms_)
            if (m.s && m.t <= lead.t)
                throw std::domain_error("s-part does not have positive order relative to the leading term");
        long k = lead.t;
        long n_known = tp_ >= kExact ? kExact : tp_ - k;  // coefficients of 1+R known below this
        bool s_free = std::none_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.s; });
        if (n_known >= kExact) {
            // exact polynomial in t: only monomials t^k are invertible exactly
            if (terms_.size() == 1)
                return monomial({0, 0, 0, -k}, Traits::one());
            throw std::domain_error("inverse of an exact non-monomial series needs a precision");
        }
        Series out = zero(n_known - k, kExact);
        if (s_free) {
            // g_n = sum_{j=1..n} r_j g_{n-j}
            std::vector<C> r(std::max<long>(n_known, 1), Traits::zero()), g(std::max<long>(n_known, 1), Traits::zero());
            for (const auto& [m, x] : terms_)
                if (m.t - k < n_known)
                    r[m.t - k] = x;
            if (n_known > 0)
                g[0] = Traits::one();
            for (long n = 1; n < n_known; ++n) {
                C acc = Traits::zero();
                for (long j = 1; j <= n; ++j)
                    if (!Traits::is_zero(r[j]) && !Traits::is_zero(g[n - j]))
                        acc += r[j] * g[n - j];
                g[n] = acc;
            }
            for (long n = 0; n < n_known; ++n)
                out.add_term({0, 0, 0, n - k}, g[n]);
            out.tf_ = -k;
            return out;
        }
        // Generic fallback: H = 1 + R H iterated; each pass fixes one more order.
        Series rest = shifted(0, -k);
        rest.terms_.erase(STMonomial{});
        rest.tf_ = 1;
        Series h = one();
        h.tp_ = 1;
        for (long pass = 0; pass < n_known; ++pass) {
            Series next = one() + rest * h;
            next.truncate(n_known);
            h = next;
        }
        h.truncate(n_known);
        return h.shifted(0, -k);
    }

    /// Agreement on the common known region.
    bool agrees_with(const Series& g) const { return first_difference(g) == std::nullopt; }

    std::optional<STMonomial> first_difference(const Series& g) const
    {
        long tp = std::min(tp_, g.tp_), dp = std::min(dp_, g.dp_);
        auto inside = [&](const STMonomial& m) { return m.t < tp && m.d < dp; };
        for (const auto& [m, x] : terms_)
            if (inside(m)) {
                auto it = g.terms_.find(m);
                if (it == g.terms_.end() || !(it->second == x))
                    return m;
            }
        for (const auto& [m, x] : g.terms_)
            if (inside(m) && !terms_.count(m))
                return m;
        return std::nullopt;
    }

    // Exact structural equality including precision.
    friend bool operator==(const Series& f, const Series& g) { return f.tp_ == g.tp_ && f.dp_ == g.dp_ && f.terms_ == g.terms_; }

    /// Apply a coefficient map term by term (not multiplicative in s,t; use substitute for that).
    template <class D, class Fn>
    Series<D> map_coefficients(Fn&& fn) const
    {
        Series<D> r = Series<D>::zero(tp_, dp_);
        r.set_floors(t_floor(), df_);
        for (const auto& [m, x] : terms_)
            r.add_term(m, fn(x));
        return r;
    }

    void set_floors(long tf, long df)
    {
        tf_ = tf;
        df_ = df;
    }

    // Lower the floors to what the stored terms and the unknown region actually allow.
    void tighten_floors()
    {
        // unknown terms past d_prec keep the old t bound, and vice versa
        long tf = dp_ < kExact ? std::min(tf_, tp_) : tp_;
        long df = tp_ < kExact ? df_ : dp_;
        for (const auto& [m, x] : terms_) {
            tf = std::min(tf, m.t);
            df = std::min(df, m.d);
        }
        tf_ = tf;
        df_ = df;
    }

private:
    TermMap terms_;
    long tp_ = kExact;
    long dp_ = kExact;
    long tf_ = kExact;
    long df_ = kExact;
};

using STSeries = Series<AlgElement>;

/// Images of the four variables under a substitution; an empty slot maps the variable to itself.
template <class D>
struct Assignment {
    std::optional<Series<D>> c, s, d, t;
};

namespace detail {

    template <class D>
    struct PowerCache {
        const Series<D>& base;
        std::map<long, Series<D>> powers;
        Series<D> get(long n)
        {
            auto it = powers.find(n);
            if (it != powers.end())
                return it->second;
            Series<D> r;
            if (n == 0)
                r = Series<D>::one();
            else if (n == 1)
                r = base;
            else if (n == -1)
                r = base.invert();
            else if (n > 0)
                r = get(n - 1) * base;
            else
                r = get(n + 1) * get(-1);
            return powers.emplace(n, r).first->second;
        }
    };

    // Lower bound for sum coef_i * x_i over x_i >= lo_i (fixed ones have coef applied to their single value).
    struct LinearBound {
        bool valid = true;
        long value = 0;
        void add_unbounded(long coef, long lo)
        {
            if (coef < 0)
                valid = false;
            else
                value += coef * lo;
        }
        void add_bit(long coef) { value += std::min(0L, coef); }
    };

}  // namespace detail

/// Ring-homomorphic substitution F(c,s,d,t) -> F(C,S,D,T), mapping coefficients through coeff_map.
///
/// coeff_map sends a source coefficient to a series in the target ring; the images of a and u
/// must satisfy S^2 = a'S + u'T and C^2 = a'C + u'D (checked).
template <class Src, class D, class Fn>
Series<D> substitute(const Series<Src>& f, const Assignment<D>& assign, Fn&& coeff_map, bool check_relations = true)
{
    using TS = Series<D>;
    TS c = assign.c ? *assign.c : TS::var_c();
    TS s = assign.s ? *assign.s : TS::var_s();
    TS d = assign.d ? *assign.d : TS::var_d();
    TS t = assign.t ? *assign.t : TS::var_t();

    TS a_img = coeff_map(CoeffTraits<Src>::a());
    TS u_img = coeff_map(CoeffTraits<Src>::u());
    bool uses_c = false, uses_s = false;
    for (const auto& [m, x] : f.terms()) {
        uses_c |= m.c != 0;
        uses_s |= m.s != 0;
    }
    if (check_relations && uses_s && (assign.s || assign.t) && !(s * s).agrees_with(a_img * s + u_img * t))
        throw std::invalid_argument("substitution does not respect s^2 = as + ut");
    if (check_relations && uses_c && (assign.c || assign.d) && !(c * c).agrees_with(a_img * c + u_img * d))
        throw std::invalid_argument("substitution does not respect c^2 = ac + ud");

    detail::PowerCache<D> dpow{d, {}}, tpow{t, {}};
    TS out;
    bool first = true;
    for (const auto& [m, x] : f.terms()) {
        TS term = coeff_map(x);
        if (m.c)
            term *= c;
        if (m.s)
            term *= s;
        if (m.d)
            term *= dpow.get(m.d);
        if (m.t)
            term *= tpow.get(m.t);
        if (first) {
            out = term;
            first = false;
        } else {
            out += term;
        }
    }

    // Unknown terms of f: those with t >= t_prec, and those with d >= d_prec.
    long tp = out.t_prec(), dp = out.d_prec();
    auto region = [&](bool t_region) {
        long n_lo = t_region ? f.t_prec() : f.t_floor();
        long m_lo = t_region ? f.d_floor() : f.d_prec();
        if (n_lo >= kExact || m_lo >= kExact)
            return;
        // t-exponent of the image grows along n with coefficient t.t_floor(), etc.
        detail::LinearBound tb, db;
        tb.add_unbounded(t.t_floor(), n_lo);
        tb.add_unbounded(d.t_floor(), m_lo);
        tb.add_bit(c.t_floor());
        tb.add_bit(s.t_floor());
        db.add_unbounded(t.d_floor(), n_lo);
        db.add_unbounded(d.d_floor(), m_lo);
        db.add_bit(c.d_floor());
        db.add_bit(s.d_floor());
        long grow_t = t_region ? t.t_floor() : d.t_floor();
        long grow_d = t_region ? t.d_floor() : d.d_floor();
        if (tb.valid && grow_t > 0)
            tp = std::min(tp, tb.value);
        else if (db.valid && grow_d > 0)
            dp = std::min(dp, db.value);
        else
            throw ConvergenceError("substitution does not converge on the truncated part of the series");
    };
    region(true);
    region(false);
    if (first)
        out = TS::zero();
    out.truncate(tp, dp);
    return out;
}

/// Substitution with coefficients carried over unchanged.
template <class C>
Series<C> substitute(const Series<C>& f, const Assignment<C>& assign)
{
    return substitute(f, assign, [](const C& x) { return Series<C>::constant(x); });
}

/// The swap c <-> s, d <-> t.
template <class C>
Series<C> swap_variables(const Series<C>& f)
{
    Series<C> r = Series<C>::zero(f.d_prec(), f.t_prec());
    r.set_floors(f.d_floor(), f.t_floor());
    for (const auto& [m, x] : f.terms())
        r.add_term({m.s, m.c, m.t, m.d}, x);
    return r;
}

template <class C, class Fmt>
std::string format_series(const Series<C>& f, Fmt&& fmt_coeff)
{
    std::string out;
    for (const auto& [m, x] : f.terms()) {
        if (!out.empty())
            out += " + ";
        out += "(" + fmt_coeff(x) + ")";
        if (m.c)
            out += "*c";
        if (m.s)
            out += "*s";
        if (m.d)
            out += "*d" + (m.d == 1 ? std::string() : "^" + std::to_string(m.d));
        if (m.t)
            out += "*t" + (m.t == 1 ? std::string() : "^" + std::to_string(m.t));
    }
    if (out.empty())
        out = "0";
    if (f.t_prec() < kExact)
        out += " + O(t^" + std::to_string(f.t_prec()) + ")";
    if (f.d_prec() < kExact)
        out += " + O(d^" + std::to_string(f.d_prec()) + ")";
    return out;
}

}  // namespace eqsteenrod
