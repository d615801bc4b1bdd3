#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grading.hpp"

namespace eqsteenrod {

// Largest xi/tau index a monomial can hold.
inline constexpr int kMaxIndex = 14;

class IndexOverflow : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Normal-form monomial u^p a^q prod xi_i^{e_i} prod tau_i^{d_i} with d_i in {0,1}.
struct GenMonomial {
    std::uint16_t u = 0;
    std::uint16_t a = 0;
    std::array<std::uint16_t, kMaxIndex> xi{};  // xi[i-1] is the exponent of xi_i
    std::uint32_t tau = 0;                      // bit i set iff tau_i divides

    static GenMonomial one() { return {}; }

    static GenMonomial of(Generator g)
    {
        GenMonomial m;
        switch (g.kind) {
        case GenKind::U: m.u = 1; break;
        case GenKind::A: m.a = 1; break;
        case GenKind::Xi:
            check_index(g.index);
            m.xi[g.index - 1] = 1;
            break;
        case GenKind::Tau:
            check_index(g.index);
            m.tau = 1u << g.index;
            break;
        }
        return m;
    }

    static void check_index(int i)
    {
        if (i < 0 || i > kMaxIndex)
            throw IndexOverflow("generator index " + std::to_string(i) + " exceeds the supported ceiling " +
                                std::to_string(kMaxIndex));
    }

    int xi_exp(int i) const { return (i >= 1 && i <= kMaxIndex) ? xi[i - 1] : 0; }
    bool has_tau(int i) const { return i >= 0 && i <= kMaxIndex && ((tau >> i) & 1u); }

    bool is_one() const { return *this == GenMonomial{}; }
    // Lies in the coefficient ring F2[u,a].
    bool is_scalar() const { return tau == 0 && std::all_of(xi.begin(), xi.end(), [](auto e) { return e == 0; }); }
    // Has no u or a factor.
    bool is_pure() const { return u == 0 && a == 0; }

    int max_index() const
    {
        int top = -1;
        for (int i = kMaxIndex; i >= 1; --i)
            if (xi[i - 1]) {
                top = i;
                break;
            }
        if (tau)
            top = std::max(top, 31 - std::countl_zero(tau));
        return top;
    }

    RODegree degree() const
    {
        RODegree d = long(u) * degree_of({GenKind::U}) + long(a) * degree_of({GenKind::A});
        for (int i = 1; i <= kMaxIndex; ++i)
            if (xi[i - 1])
                d = d + long(xi[i - 1]) * degree_of({GenKind::Xi, i});
        for (int i = 0; i <= kMaxIndex; ++i)
            if (has_tau(i))
                d = d + degree_of({GenKind::Tau, i});
        return d;
    }

    // Strip u and a; the pair returned is (u^p a^q, pure part).
    std::pair<GenMonomial, GenMonomial> split_scalar() const
    {
        GenMonomial s;
        s.u = u;
        s.a = a;
        GenMonomial p = *this;
        p.u = 0;
        p.a = 0;
        return {s, p};
    }

    friend bool operator==(const GenMonomial&, const GenMonomial&) = default;

    // Lexicographic on (u, a, xi vector, tau set as an ascending index list).
    friend bool operator<(const GenMonomial& x, const GenMonomial& y)
    {
        if (x.u != y.u)
            return x.u < y.u;
        if (x.a != y.a)
            return x.a < y.a;
        if (x.xi != y.xi)
            return x.xi < y.xi;
        if (x.tau == y.tau)
            return false;
        // Compare the sorted index lists; the first differing bit decides.
        std::uint32_t diff = x.tau ^ y.tau;
        int low = std::countr_zero(diff);
        std::uint32_t below = (1u << low) - 1;
        // x's list is a prefix of y's (x < y) when x has no bit at `low` and nothing above it.
        if ((x.tau >> low) & 1u) {
            // x has index `low`, y does not: y either ended (y < x) or continues with a larger index (x < y)
            return (y.tau & ~below) != 0;
        }
        return (x.tau & ~below) == 0;
    }
};

struct GenMonomialHash {
    std::size_t operator()(const GenMonomial& m) const noexcept
    {
        std::size_t h = std::hash<std::uint64_t>{}((std::uint64_t(m.u) << 48) ^ (std::uint64_t(m.a) << 32) ^ m.tau);
        for (auto e : m.xi)
            h = h * 1000003u ^ e;
        return h;
    }
};

namespace detail {

    inline GenMonomial times_commuting(GenMonomial m, const GenMonomial& n)
    {
        m.u += n.u;
        m.a += n.a;
        for (int i = 0; i < kMaxIndex; ++i)
            m.xi[i] += n.xi[i];
        return m;
    }

    // Multiply each monomial by tau_j, rewriting tau_j^2 = u xi_{j+1} + a tau_0 xi_{j+1} + a tau_{j+1}.
    inline void mul_tau(GenMonomial m, int j, std::vector<GenMonomial>& out)
    {
        if (!m.has_tau(j)) {
            m.tau |= 1u << j;
            out.push_back(m);
            return;
        }
        if (j + 1 > kMaxIndex)
            throw IndexOverflow("tau_" + std::to_string(j) + "^2 needs generators past the supported ceiling");
        m.tau &= ~(1u << j);
        m.xi[j] += 1;  // xi_{j+1}
        GenMonomial t1 = m;
        t1.u += 1;
        out.push_back(t1);
        GenMonomial t2 = m;
        t2.a += 1;
        mul_tau(t2, 0, out);
        GenMonomial t3 = m;
        t3.xi[j] -= 1;
        t3.a += 1;
        mul_tau(t3, j + 1, out);
    }

    // Sort and drop pairs: F2 accumulation.
    inline void cancel_pairs(std::vector<GenMonomial>& v)
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

    // Expansion of tau^{S} * tau^{T} for tau sets S, T, as a list of monomials (cached).
    inline const std::vector<GenMonomial>& tau_product(std::uint32_t s, std::uint32_t t)
    {
        thread_local std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<GenMonomial>> cache;
        auto key = std::minmax(s, t);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
        GenMonomial base;
        base.tau = key.first;
        std::vector<GenMonomial> cur{base};
        std::uint32_t rest = key.second;
        while (rest) {
            int j = std::countr_zero(rest);
            rest &= rest - 1;
            std::vector<GenMonomial> next;
            for (const auto& m : cur)
                mul_tau(m, j, next);
            cancel_pairs(next);
            cur = std::move(next);
        }
        return cache.emplace(key, std::move(cur)).first->second;
    }

    inline void multiply_into(const GenMonomial& x, const GenMonomial& y, std::vector<GenMonomial>& out)
    {
        GenMonomial base = times_commuting(x, y);
        if ((x.tau & y.tau) == 0) {
            base.tau = x.tau | y.tau;
            out.push_back(base);
            return;
        }
        base.tau = 0;
        for (const auto& t : tau_product(x.tau, y.tau))
            out.push_back(times_commuting(t, base));
    }

}  // namespace detail

/// Result of asking for the degree of an element.
struct DegreeInfo {
    enum class Kind { Zero, Homogeneous, Inhomogeneous } kind;
    RODegree degree{};

    bool homogeneous() const { return kind == Kind::Homogeneous; }
};

/// An F2-linear combination of normal-form monomials.
class AlgElement {
public:
    AlgElement() = default;
    AlgElement(const GenMonomial& m) : terms_{m} {}
    explicit AlgElement(std::vector<GenMonomial> terms) : terms_(std::move(terms)) { detail::cancel_pairs(terms_); }

    static AlgElement zero() { return {}; }
    static AlgElement one() { return AlgElement(GenMonomial::one()); }
    static AlgElement gen(Generator g) { return AlgElement(GenMonomial::of(g)); }
    static AlgElement u() { return gen({GenKind::U}); }
    static AlgElement a() { return gen({GenKind::A}); }
    static AlgElement xi(int i) { return i == 0 ? one() : gen({GenKind::Xi, i}); }
    static AlgElement tau(int i) { return gen({GenKind::Tau, i}); }

    std::span<const GenMonomial> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].is_one(); }
    bool contains(const GenMonomial& m) const { return std::binary_search(terms_.begin(), terms_.end(), m); }

    AlgElement& operator+=(const AlgElement& y)
    {
        std::vector<GenMonomial> out;
        out.reserve(terms_.size() + y.terms_.size());
        std::set_symmetric_difference(terms_.begin(), terms_.end(), y.terms_.begin(), y.terms_.end(),
                                      std::back_inserter(out));
        terms_ = std::move(out);
        return *this;
    }
    friend AlgElement operator+(AlgElement x, const AlgElement& y) { return x += y; }
    friend AlgElement operator-(AlgElement x, const AlgElement& y) { return x += y; }

    friend AlgElement operator*(const AlgElement& x, const AlgElement& y)
    {
        if (x.is_zero() || y.is_zero())
            return {};
        if (x.is_one())
            return y;
        if (y.is_one())
            return x;
        std::vector<GenMonomial> out;
        out.reserve(x.size() * y.size());
        for (const auto& m : x.terms_)
            for (const auto& n : y.terms_)
                detail::multiply_into(m, n, out);
        return AlgElement(std::move(out));
    }
    AlgElement& operator*=(const AlgElement& y) { return *this = *this * y; }

    // Multiplication by u^p a^q; preserves the term order.
    AlgElement times_scalar(int p, int q) const
    {
        AlgElement r = *this;
        for (auto& m : r.terms_) {
            m.u += p;
            m.a += q;
        }
        return r;
    }

    AlgElement pow(unsigned n) const
    {
        AlgElement result = one(), base = *this;
        while (n) {
            if (n & 1u)
                result *= base;
            n >>= 1;
            if (n)
                base *= base;
        }
        return result;
    }

    DegreeInfo degree() const
    {
        if (terms_.empty())
            return {DegreeInfo::Kind::Zero};
        RODegree d = terms_.front().degree();
        for (const auto& m : terms_)
            if (m.degree() != d)
                return {DegreeInfo::Kind::Inhomogeneous};
        return {DegreeInfo::Kind::Homogeneous, d};
    }

    int max_index() const
    {
        int top = -1;
        for (const auto& m : terms_)
            top = std::max(top, m.max_index());
        return top;
    }

    friend bool operator==(const AlgElement&, const AlgElement&) = default;
    friend bool operator<(const AlgElement& x, const AlgElement& y) { return x.terms_ < y.terms_; }

private:
    std::vector<GenMonomial> terms_;
};

inline AlgElement multiply(const AlgElement& x, const AlgElement& y) { return x * y; }

/// All normal-form monomials of degree d using xi_i, tau_i with i <= index_bound.
inline std::vector<GenMonomial> basis_in_degree(RODegree d, int index_bound)
{
    std::vector<GenMonomial> out;
    if (d.fixed < 0)
        return out;
    index_bound = std::min(index_bound, kMaxIndex);
    // Generators with positive fixed degree; u contributes the rest, a fixes the sign.
    std::vector<Generator> gens;
    for (int i = 0; i <= index_bound; ++i) {
        if (degree_of({GenKind::Tau, i}).fixed <= d.fixed)
            gens.push_back({GenKind::Tau, i});
        if (i >= 1 && degree_of({GenKind::Xi, i}).fixed <= d.fixed)
            gens.push_back({GenKind::Xi, i});
    }
    std::function<void(std::size_t, GenMonomial, RODegree)> walk = [&](std::size_t k, GenMonomial m, RODegree acc) {
        if (k == gens.size()) {
            long p = d.fixed - acc.fixed;
            long q = acc.sign - p - d.sign;
            if (p >= 0 && q >= 0) {
                m.u = std::uint16_t(p);
                m.a = std::uint16_t(q);
                out.push_back(m);
            }
            return;
        }
        Generator g = gens[k];
        RODegree step = degree_of(g);
        walk(k + 1, m, acc);
        if (g.kind == GenKind::Tau) {
            if (acc.fixed + step.fixed <= d.fixed) {
                m.tau |= 1u << g.index;
                walk(k + 1, m, acc + step);
            }
            return;
        }
        for (int e = 1; acc.fixed + e * step.fixed <= d.fixed; ++e) {
            m.xi[g.index - 1] = std::uint16_t(e);
            walk(k + 1, m, acc + long(e) * step);
        }
    };
    walk(0, GenMonomial{}, RODegree{});
    std::sort(out.begin(), out.end());
    return out;
}

/// Degree window used by the exhaustive suites: 0 <= fixed <= fixed_max, |sign| <= sign_max.
struct DegreeBox {
    long fixed_max = 6;
    long sign_max = 6;

    bool contains(RODegree d) const { return d.fixed >= 0 && d.fixed <= fixed_max && d.sign >= -sign_max && d.sign <= sign_max; }
};

inline std::vector<GenMonomial> basis_in_box(DegreeBox box, int index_bound)
{
    std::vector<GenMonomial> out;
    for (long f = 0; f <= box.fixed_max; ++f)
        for (long s = -box.sign_max; s <= box.sign_max; ++s) {
            auto part = basis_in_degree({f, s}, index_bound);
            out.insert(out.end(), part.begin(), part.end());
        }
    std::sort(out.begin(), out.end(), [](const GenMonomial& x, const GenMonomial& y) {
        auto dx = x.degree(), dy = y.degree();
        return dx != dy ? dx < dy : x < y;
    });
    return out;
}

}  // namespace eqsteenrod
