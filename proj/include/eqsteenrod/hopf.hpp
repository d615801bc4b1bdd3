#pragma once

// Hopf algebroid structure on the dual Steenrod algebra: right unit, coproduct, counit, antipode.

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "algebra_io.hpp"
#include "series.hpp"

namespace eqsteenrod {

namespace detail {

    // eta_R(u)^p a^q, cached by p
    inline const AlgElement& eta_r_u_power(int p)
    {
        thread_local std::vector<AlgElement> powers{AlgElement::one()};
        while (int(powers.size()) <= p)
            powers.push_back(powers.back() * (AlgElement::u() + AlgElement::a() * AlgElement::tau(0)));
        return powers[p];
    }

    inline void multiply_monomials(const GenMonomial& x, const GenMonomial& y, std::vector<GenMonomial>& out)
    {
        out.clear();
        multiply_into(x, y, out);
        cancel_pairs(out);
    }

}  // namespace detail

/// Right unit on the coefficient ring: a -> a, u -> u + a tau_0.
inline AlgElement eta_R(const AlgElement& x)
{
    std::vector<GenMonomial> out;
    for (const auto& m : x.terms()) {
        if (!m.is_scalar())
            throw std::invalid_argument("eta_R is defined on F2[u,a] only; got " + format(m));
        for (const auto& n : detail::eta_r_u_power(m.u).terms()) {
            GenMonomial k = n;
            k.a += m.a;
            out.push_back(k);
        }
    }
    return AlgElement(std::move(out));
}

/// An element of the N-fold tensor power over the coefficient ring.
///
/// Normal form: every factor except the first is free of u and a. A scalar c in factor k is moved
/// into factor k-1 as eta_R(c), working from the right.
template <std::size_t N>
class Tensor {
public:
    using Key = std::array<GenMonomial, N>;

    Tensor() = default;

    static Tensor one()
    {
        Tensor t;
        t.terms_.push_back(Key{});
        return t;
    }

    /// x_0 (x) x_1 (x) ... brought to normal form.
    static Tensor of(const std::array<AlgElement, N>& xs)
    {
        std::vector<Key> raw{Key{}};
        for (std::size_t f = 0; f < N; ++f) {
            std::vector<Key> next;
            for (const auto& k : raw)
                for (const auto& m : xs[f].terms()) {
                    Key kk = k;
                    kk[f] = m;
                    next.push_back(kk);
                }
            raw = std::move(next);
        }
        return normalize(std::move(raw));
    }

    /// x in the first factor.
    static Tensor left(const AlgElement& x)
    {
        Tensor t;
        for (const auto& m : x.terms()) {
            Key k{};
            k[0] = m;
            t.terms_.push_back(k);
        }
        return t;
    }

    /// Build from raw keys, normalizing.
    static Tensor from_keys(std::vector<Key> raw) { return normalize(std::move(raw)); }

    const std::vector<Key>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0] == Key{}; }

    Tensor& operator+=(const Tensor& y)
    {
        std::vector<Key> out;
        out.reserve(terms_.size() + y.terms_.size());
        std::set_symmetric_difference(terms_.begin(), terms_.end(), y.terms_.begin(), y.terms_.end(),
                                      std::back_inserter(out));
        terms_ = std::move(out);
        return *this;
    }
    friend Tensor operator+(Tensor x, const Tensor& y) { return x += y; }
    friend Tensor operator-(Tensor x, const Tensor& y) { return x += y; }

    friend Tensor operator*(const Tensor& x, const Tensor& y)
    {
        if (x.is_zero() || y.is_zero())
            return {};
        if (x.is_one())
            return y;
        if (y.is_one())
            return x;
        std::vector<Key> raw;
        std::array<std::vector<GenMonomial>, N> prods;
        for (const auto& k1 : x.terms_)
            for (const auto& k2 : y.terms_) {
                for (std::size_t f = 0; f < N; ++f)
                    detail::multiply_monomials(k1[f], k2[f], prods[f]);
                expand(prods, raw);
            }
        return normalize(std::move(raw));
    }
    Tensor& operator*=(const Tensor& y) { return *this = *this * y; }

    // Multiply by u^p a^q; scalars live in the first factor.
    Tensor times_scalar(int p, int q) const
    {
        Tensor r = *this;
        for (auto& k : r.terms_) {
            k[0].u += p;
            k[0].a += q;
        }
        return r;
    }

    friend bool operator==(const Tensor&, const Tensor&) = default;
    friend bool operator<(const Tensor& x, const Tensor& y) { return x.terms_ < y.terms_; }

private:
    std::vector<Key> terms_;

    static void expand(const std::array<std::vector<GenMonomial>, N>& prods, std::vector<Key>& raw)
    {
        for (const auto& p : prods)
            if (p.empty())
                return;
        std::array<std::size_t, N> idx{};
        for (;;) {
            Key k;
            for (std::size_t f = 0; f < N; ++f)
                k[f] = prods[f][idx[f]];
            raw.push_back(k);
            std::size_t f = N;
            while (f > 0) {
                --f;
                if (++idx[f] < prods[f].size())
                    break;
                idx[f] = 0;
                if (f == 0)
                    return;
            }
        }
    }

    static void cancel(std::vector<Key>& v)
    {
        std::sort(v.begin(), v.end());
        std::size_t w = 0;
        for (std::size_t r = 0; r < v.size();) {
            std::size_t e = r + 1;
            while (e < v.size() && v[e] == v[r])
                ++e;
            if ((e - r) & 1u)
                v[w++] = v[r];
            r = e;
        }
        v.resize(w);
    }

    static Tensor normalize(std::vector<Key> raw)
    {
        std::vector<GenMonomial> prod;
        for (std::size_t f = N - 1; f >= 1; --f) {
            std::vector<Key> next;
            next.reserve(raw.size());
            for (const auto& k : raw) {
                if (k[f].is_pure()) {
                    next.push_back(k);
                    continue;
                }
                int p = k[f].u, q = k[f].a;
                Key base = k;
                base[f].u = 0;
                base[f].a = 0;
                for (const auto& n : detail::eta_r_u_power(p).terms()) {
                    GenMonomial c = n;
                    c.a += q;
                    detail::multiply_monomials(base[f - 1], c, prod);
                    for (const auto& m : prod) {
                        Key kk = base;
                        kk[f - 1] = m;
                        next.push_back(kk);
                    }
                }
            }
            raw = std::move(next);
            cancel(raw);
        }
        cancel(raw);
        Tensor t;
        t.terms_ = std::move(raw);
        return t;
    }
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

template <>
struct CoeffTraits<Tensor2> {
    static Tensor2 zero() { return {}; }
    static Tensor2 one() { return Tensor2::one(); }
    static bool is_zero(const Tensor2& x) { return x.is_zero(); }
    static Tensor2 scalar_mul(const Tensor2& x, int p, int q) { return x.times_scalar(p, q); }
    static Tensor2 u() { return Tensor2::left(AlgElement::u()); }
    static Tensor2 a() { return Tensor2::left(AlgElement::a()); }
};

/// 1 (x) y, normalized.
inline Tensor2 right_embed(const AlgElement& y) { return Tensor2::of({AlgElement::one(), y}); }

template <std::size_t N>
std::string format(const Tensor<N>& z)
{
    if (z.is_zero())
        return "0";
    std::string out;
    for (const auto& k : z.terms()) {
        if (!out.empty())
            out += " + ";
        for (std::size_t f = 0; f < N; ++f)
            out += (f ? "(x)" : "") + format(k[f]);
    }
    return out;
}

inline nlohmann::json to_json(const Tensor2& z)
{
    nlohmann::json j = nlohmann::json::array();
    for (const auto& k : z.terms())
        j.push_back({{"left", to_json(k[0])}, {"right", to_json(k[1])}});
    return j;
}

// ---------------------------------------------------------------------------------------------
// coproduct

namespace detail {

    inline const Tensor2& psi_generator(Generator g)
    {
        thread_local std::map<std::pair<int, int>, Tensor2> cache;
        auto key = std::make_pair(int(g.kind), g.index);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
        Tensor2 r;
        switch (g.kind) {
        case GenKind::U:
            r = Tensor2::left(AlgElement::u());
            break;
        case GenKind::A:
            r = Tensor2::left(AlgElement::a());
            break;
        case GenKind::Xi:
            // sum_{i+j=n} xi_i^{2^j} (x) xi_j
            for (int i = 0; i <= g.index; ++i) {
                int j = g.index - i;
                r += Tensor2::of({AlgElement::xi(i).pow(1u << j), AlgElement::xi(j)});
            }
            break;
        case GenKind::Tau:
            r = Tensor2::left(AlgElement::tau(g.index));
            for (int i = 0; i <= g.index; ++i) {
                int j = g.index - i;
                r += Tensor2::of({AlgElement::xi(i).pow(1u << j), AlgElement::tau(j)});
            }
            break;
        }
        return cache.emplace(key, std::move(r)).first->second;
    }

    template <class T, class GenFn>
    T monomial_image(const GenMonomial& m, GenFn&& gen_image)
    {
        T r = T::one();
        auto times_power = [&](const T& base, int e) {
            for (int k = 0; k < e; ++k)
                r *= base;
        };
        times_power(gen_image(Generator{GenKind::U, 0}), m.u);
        times_power(gen_image(Generator{GenKind::A, 0}), m.a);
        for (int i = 1; i <= kMaxIndex; ++i)
            if (m.xi_exp(i))
                times_power(gen_image(Generator{GenKind::Xi, i}), m.xi_exp(i));
        for (int i = 0; i <= kMaxIndex; ++i)
            if (m.has_tau(i))
                r *= gen_image(Generator{GenKind::Tau, i});
        return r;
    }

}  // namespace detail

/// Coproduct: psi(xi_n) = sum xi_i^{2^j} (x) xi_j, psi(tau_n) = tau_n (x) 1 + sum xi_i^{2^j} (x) tau_j.
inline Tensor2 psi(const AlgElement& x)
{
    thread_local std::map<GenMonomial, Tensor2> cache;
    Tensor2 r;
    for (const auto& m : x.terms()) {
        auto it = cache.find(m);
        if (it == cache.end())
            it = cache.emplace(m, detail::monomial_image<Tensor2>(m, detail::psi_generator)).first;
        r += it->second;
    }
    return r;
}

/// Counit on the coefficient ring: xi and tau go to zero.
inline AlgElement counit(const AlgElement& x)
{
    std::vector<GenMonomial> out;
    for (const auto& m : x.terms())
        if (m.is_scalar())
            out.push_back(m);
    return AlgElement(std::move(out));
}

/// (eps (x) 1) and (1 (x) eps) applied to a tensor.
inline AlgElement counit_left(const Tensor2& z)
{
    std::vector<GenMonomial> out;
    for (const auto& k : z.terms())
        if (k[0].is_scalar())
            detail::multiply_into(k[0], k[1], out);
    return AlgElement(std::move(out));
}

inline AlgElement counit_right(const Tensor2& z)
{
    std::vector<GenMonomial> out;
    for (const auto& k : z.terms())
        if (k[1].is_one())
            out.push_back(k[0]);
    return AlgElement(std::move(out));
}

/// (psi (x) 1) and (1 (x) psi), landing in the triple tensor.
inline Tensor3 psi_then_left(const Tensor2& z)
{
    std::vector<Tensor3::Key> raw;
    for (const auto& k : z.terms()) {
        Tensor2 image = psi(AlgElement(k[0]));
        for (const auto& kk : image.terms())
            raw.push_back({kk[0], kk[1], k[1]});
    }
    return Tensor3::from_keys(std::move(raw));
}

inline Tensor3 psi_then_right(const Tensor2& z)
{
    std::vector<Tensor3::Key> raw;
    for (const auto& k : z.terms()) {
        Tensor2 image = psi(AlgElement(k[1]));
        for (const auto& kk : image.terms())
            raw.push_back({k[0], kk[0], kk[1]});
    }
    return Tensor3::from_keys(std::move(raw));
}

// ---------------------------------------------------------------------------------------------
// antipode

namespace detail {

    struct ChiGenerators {
        std::vector<AlgElement> xi{AlgElement::one()};
        std::vector<AlgElement> tau;

        const AlgElement& get_xi(int n)
        {
            // chi(xi_n) = sum_{i<n} chi(xi_i)^{2^{n-i}} xi_{n-i}, from m(chi (x) 1) psi(xi_n) = 0
            while (int(xi.size()) <= n) {
                int m = int(xi.size());
                AlgElement r;
                for (int i = 0; i < m; ++i)
                    r += xi[i].pow(1u << (m - i)) * AlgElement::xi(m - i);
                xi.push_back(r);
            }
            return xi[n];
        }

        const AlgElement& get_tau(int n)
        {
            // chi(tau_n) = sum_{i+j=n} chi(xi_i)^{2^j} tau_j
            while (int(tau.size()) <= n) {
                int m = int(tau.size());
                AlgElement r;
                for (int i = 0; i <= m; ++i)
                    r += get_xi(i).pow(1u << (m - i)) * AlgElement::tau(m - i);
                tau.push_back(r);
            }
            return tau[n];
        }
    };

    inline ChiGenerators& chi_generators()
    {
        thread_local ChiGenerators g;
        return g;
    }

    inline AlgElement chi_generator(Generator g)
    {
        switch (g.kind) {
        case GenKind::U:
            return AlgElement::u() + AlgElement::a() * AlgElement::tau(0);
        case GenKind::A:
            return AlgElement::a();
        case GenKind::Xi:
            return chi_generators().get_xi(g.index);
        case GenKind::Tau:
            return chi_generators().get_tau(g.index);
        }
        return {};
    }

}  // namespace detail

/// Antipode, a ring automorphism in characteristic 2.
inline AlgElement chi(const AlgElement& x)
{
    thread_local std::map<GenMonomial, AlgElement> cache;
    AlgElement r;
    for (const auto& m : x.terms()) {
        auto it = cache.find(m);
        if (it == cache.end())
            it = cache.emplace(m, detail::monomial_image<AlgElement>(m, detail::chi_generator)).first;
        r += it->second;
    }
    return r;
}

/// m(chi (x) 1) applied to a tensor.
inline AlgElement chi_multiply(const Tensor2& z)
{
    AlgElement r;
    for (const auto& k : z.terms())
        r += chi(AlgElement(k[0])) * AlgElement(k[1]);
    return r;
}

// ---------------------------------------------------------------------------------------------
// generator series

/// xi(t) = t + sum xi_i t^{2^i}, truncated at t^prec.
inline STSeries xi_series(long prec)
{
    STSeries r = STSeries::zero(prec);
    for (int i = 0; (1L << i) < prec; ++i)
        r.add_term({0, 0, 0, 1L << i}, AlgElement::xi(i));
    r.tighten_floors();
    return r;
}

/// tau(s,t) = s + sum tau_i t^{2^i}.
inline STSeries tau_series(long prec)
{
    STSeries r = STSeries::zero(prec);
    r.add_term({0, 1, 0, 0}, AlgElement::one());
    for (int i = 0; (1L << i) < prec; ++i)
        r.add_term({0, 0, 0, 1L << i}, AlgElement::tau(i));
    r.tighten_floors();
    return r;
}

/// Composition inverse of xi(t), found by iterating g = t + sum_{i>=1} xi_i g^{2^i} in the series ring.
inline STSeries conj_xi(long prec)
{
    if (prec < 2)
        throw std::invalid_argument("conj_xi needs precision at least 2");
    STSeries t = STSeries::var_t();
    STSeries g = t.truncated(prec);
    for (long pass = 0; pass < prec; ++pass) {
        STSeries next = t;
        STSeries power = g;
        for (int i = 1; (1L << i) < prec; ++i) {
            power = (power * power).truncated(prec);
            next += power.scaled(AlgElement::xi(i));
        }
        next.truncate(prec);
        next.tighten_floors();
        if (next == g)
            break;
        g = next;
    }
    return g;
}

/// The conjugate series with coefficients chi(tau_i), chi(xi_i).
inline STSeries conj_tau_from_chi(long prec)
{
    STSeries r = STSeries::zero(prec);
    r.add_term({0, 1, 0, 0}, AlgElement::one());
    for (int i = 0; (1L << i) < prec; ++i)
        r.add_term({0, 0, 0, 1L << i}, chi(AlgElement::tau(i)));
    r.tighten_floors();
    return r;
}

inline STSeries conj_xi_from_chi(long prec)
{
    STSeries r = STSeries::zero(prec);
    for (int i = 0; (1L << i) < prec; ++i)
        r.add_term({0, 0, 0, 1L << i}, chi(AlgElement::xi(i)));
    r.tighten_floors();
    return r;
}

}  // namespace eqsteenrod
