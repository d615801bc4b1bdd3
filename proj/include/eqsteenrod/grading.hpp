#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eqsteenrod {

// An element fixed + sign*sigma of RO(C2).
struct RODegree {
    long fixed = 0;
    long sign = 0;

    friend constexpr RODegree operator+(RODegree x, RODegree y) { return {x.fixed + y.fixed, x.sign + y.sign}; }
    friend constexpr RODegree operator-(RODegree x, RODegree y) { return {x.fixed - y.fixed, x.sign - y.sign}; }
    friend constexpr RODegree operator*(long k, RODegree x) { return {k * x.fixed, k * x.sign}; }
    friend constexpr bool operator==(RODegree, RODegree) = default;
    friend constexpr auto operator<=>(RODegree, RODegree) = default;

    friend std::ostream& operator<<(std::ostream& os, RODegree d) { return os << '(' << d.fixed << ',' << d.sign << ')'; }
};

// i copies of the regular representation.
constexpr RODegree rho(long i) { return {i, i}; }

inline constexpr RODegree kSigma{0, 1};

class UnknownGenerator : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class GenKind { U, A, Xi, Tau };

struct Generator {
    GenKind kind;
    int index = 0;  // meaningful for Xi (>= 1) and Tau (>= 0)

    friend constexpr bool operator==(Generator, Generator) = default;
};

constexpr RODegree degree_of(Generator g)
{
    switch (g.kind) {
    case GenKind::U: return {1, -1};
    case GenKind::A: return {0, -1};
    case GenKind::Xi: return rho((1L << g.index) - 1);
    case GenKind::Tau: return rho(1L << g.index) - kSigma;
    }
    return {};
}

// Parses "u", "a", "xi_i" (i >= 1) or "tau_i" (i >= 0).
inline Generator parse_generator(std::string_view name)
{
    if (name == "u")
        return {GenKind::U, 0};
    if (name == "a")
        return {GenKind::A, 0};
    auto indexed = [&](std::string_view prefix, GenKind kind, int min_index) -> Generator {
        std::string_view digits = name.substr(prefix.size());
        if (digits.empty() || digits.size() > 4)
            throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
        int idx = 0;
        for (char ch : digits) {
            if (ch < '0' || ch > '9')
                throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
            idx = idx * 10 + (ch - '0');
        }
        if (idx < min_index)
            throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
        return {kind, idx};
    };
    if (name.starts_with("xi_"))
        return indexed("xi_", GenKind::Xi, 1);
    if (name.starts_with("tau_"))
        return indexed("tau_", GenKind::Tau, 0);
    throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
}

inline RODegree degree_of_generator(std::string_view name) { return degree_of(parse_generator(name)); }

inline std::string generator_name(Generator g)
{
    switch (g.kind) {
    case GenKind::U: return "u";
    case GenKind::A: return "a";
    case GenKind::Xi: return "xi_" + std::to_string(g.index);
    case GenKind::Tau: return "tau_" + std::to_string(g.index);
    }
    return {};
}

/// Coefficient of x^k in (1+x)^n over F2, for any integer n.
///
/// Negative n uses the reflection C(n,k) = (-1)^k C(k-n-1,k); Lucas then reduces
/// the nonnegative case to a bitmask test.
constexpr bool binom_mod2(long n, long k)
{
    if (k < 0)
        return false;
    if (n < 0)
        n = k - n - 1;
    if (k > n)
        return false;
    return (static_cast<std::uint64_t>(k) & ~static_cast<std::uint64_t>(n)) == 0;
}

}  // namespace eqsteenrod
