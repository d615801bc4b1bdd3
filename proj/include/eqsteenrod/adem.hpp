#pragma once

// Adem relations: the swap symmetry of Q(s,t)Q(c,d) and the four explicit families.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "power_ops.hpp"

namespace eqsteenrod {

struct AdemSymmetryResult {
    AlgElement x;
    long shift = 0;  // M: Q(c,d)x has d-exponents >= -M
    long box = 0;    // symmetry compared on all terms with t- and d-exponents below box
    long compared = 0;  // nonzero coefficients inside the box
    bool pass = false;
    std::optional<STMonomial> first_failure;
};

/// Swap symmetry c <-> s, d <-> t of (t+d)^M Q(s,t)Q(c,d)x, compared on the largest square box
/// where both a coefficient and its mirror are known.
///
/// Q(s,t) on d^{-1} is not available termwise, so the check runs on t^M d^{-M} Q(s,t)(d^M Q(c,d)x),
/// which is (t+d)^M Q(s,t)Q(c,d)x and still symmetric.
inline AdemSymmetryResult adem_symmetry_check(PowerOps& ops, const AlgElement& x, long precision)
{
    AdemSymmetryResult out;
    out.x = x;
    const long d_trunc = std::max(2L, precision / 2);
    STSeries inner = swap_variables(ops.q_total(x, d_trunc));
    long m = std::max(0L, -inner.d_floor());
    out.shift = m;
    STSeries raised = inner.shifted(m, 0);
    raised.truncate(kExact, d_trunc + m);
    STSeries g = ops.q_extended(raised, precision + m).shifted(-m, m);
    out.box = std::min(g.t_prec(), g.d_prec());
    out.pass = out.box > 0;
    auto inside = [&](const STMonomial& k) { return k.t < out.box && k.d < out.box; };
    for (const auto& [k, y] : g.terms()) {
        if (!inside(k))
            continue;
        ++out.compared;
        STMonomial mirror{k.s, k.c, k.t, k.d};
        if (g.coefficient(mirror) != y) {
            out.pass = false;
            if (!out.first_failure || k < *out.first_failure)
                out.first_failure = k;
        }
    }
    return out;
}

/// Q^{i rho - eps} as a pair.
struct OpIndex {
    long i = 0;
    int eps = 0;
    friend auto operator<=>(const OpIndex&, const OpIndex&) = default;
};

inline std::string format(OpIndex q) { return "Q^{" + std::to_string(q.i) + "rho" + (q.eps ? "-1}" : "}"); }

/// scalar * Q^{outer} Q^{inner}
struct Composite {
    AlgElement scalar;
    OpIndex outer, inner;
};

/// The four printed families, plus MinusMinusShifted: the first family with binomial C(l-j-1, 2l-i-1),
/// reported as a diagnostic next to the printed one.
enum class AdemFamily { MinusMinus, PlusPlus, MinusPlus, PlusMinus, MinusMinusShifted };

inline const char* to_string(AdemFamily f)
{
    switch (f) {
    case AdemFamily::MinusMinus:
        return "Q^{i rho-1}Q^{j rho-1}";
    case AdemFamily::PlusPlus:
        return "Q^{i rho}Q^{j rho}";
    case AdemFamily::MinusPlus:
        return "Q^{i rho-1}Q^{j rho}";
    case AdemFamily::PlusMinus:
        return "Q^{i rho}Q^{j rho-1}";
    case AdemFamily::MinusMinusShifted:
        return "Q^{i rho-1}Q^{j rho-1} shifted binomial";
    }
    return "";
}

inline constexpr AdemFamily kAdemFamilies[] = {AdemFamily::MinusMinus, AdemFamily::PlusPlus, AdemFamily::MinusPlus,
                                               AdemFamily::PlusMinus};

inline Composite adem_lhs(AdemFamily f, long i, long j)
{
    bool mm = f == AdemFamily::MinusMinus || f == AdemFamily::MinusMinusShifted;
    int ei = (mm || f == AdemFamily::MinusPlus) ? 1 : 0;
    int ej = (mm || f == AdemFamily::PlusMinus) ? 1 : 0;
    return {AlgElement::one(), {i, ei}, {j, ej}};
}

/// Right-hand side of the explicit relation; l runs over a range wide enough for every nonzero binomial.
inline std::vector<Composite> adem_rhs(AdemFamily f, long i, long j)
{
    std::vector<Composite> out;
    const AlgElement one = AlgElement::one(), u = AlgElement::u(), a = AlgElement::a();
    long lo = -std::abs(i) - std::abs(j) - 4, hi = std::abs(i) + 2 * std::abs(j) + 4;
    for (long l = lo; l <= hi; ++l) {
        switch (f) {
        case AdemFamily::MinusMinus:
            if (binom_mod2(l - j - 1, 2 * l - i))
                out.push_back({one, {i + j - l, 1}, {l, 1}});
            break;
        case AdemFamily::MinusMinusShifted:
            if (binom_mod2(l - j - 1, 2 * l - i - 1))
                out.push_back({one, {i + j - l, 1}, {l, 1}});
            break;
        case AdemFamily::PlusPlus:
            if (binom_mod2(l - j - 1, 2 * l - i))
                out.push_back({one, {i + j - l, 0}, {l, 0}});
            if (binom_mod2(l - j - 1, 2 * l - 1 - i))
                out.push_back({u, {i + j - l + 1, 1}, {l, 1}});
            break;
        case AdemFamily::MinusPlus:
            if (binom_mod2(l - j - 1, 2 * l - i))
                out.push_back({one, {i + j - l, 1}, {l, 0}});
            if (binom_mod2(l - j - 1, 2 * l - i - 1))
                out.push_back({a, {i + j - l + 1, 1}, {l, 1}});
            break;
        case AdemFamily::PlusMinus:
            if (binom_mod2(l - j, 2 * l - i))
                out.push_back({one, {i + j - l, 1}, {l, 0}});
            if (binom_mod2(l - j, 2 * l + 1 - i)) {
                out.push_back({one, {i + j - l - 1, 0}, {l + 1, 1}});
                out.push_back({a, {i + j - l, 1}, {l + 1, 1}});
            }
            break;
        }
    }
    return out;
}

/// Composites Q^{outer}Q^{inner}x with the inner results memoized per element.
class CompositeEvaluator {
public:
    explicit CompositeEvaluator(PowerOps& ops) : ops_(ops) {}

    AlgElement op(const AlgElement& x, OpIndex q)
    {
        auto key = std::make_pair(x, q);
        auto it = memo_.find(key);
        if (it == memo_.end())
            it = memo_.emplace(key, ops_.q_op(x, q.i, q.eps)).first;
        return it->second;
    }

    AlgElement eval(const Composite& c, const AlgElement& x) { return c.scalar * op(op(x, c.inner), c.outer); }

    AlgElement eval(const std::vector<Composite>& cs, const AlgElement& x)
    {
        AlgElement r;
        for (const auto& c : cs)
            r += eval(c, x);
        return r;
    }

private:
    PowerOps& ops_;
    std::map<std::pair<AlgElement, OpIndex>, AlgElement> memo_;
};

struct AdemCell {
    long i = 0, j = 0;
    AdemFamily family = AdemFamily::MinusMinus;
    bool in_region = false;  // i > 2j
    int tested = 0;
    int failed = 0;
    std::optional<AlgElement> first_failure;
};

struct AdemScanReport {
    long precision = 0;
    DegreeBox degree_max;
    int index_max = 0;
    long i_max = 0, j_max = 0;
    std::vector<AdemCell> cells;

    bool region_holds() const
    {
        return std::all_of(cells.begin(), cells.end(), [](const AdemCell& c) {
            return !c.in_region || c.failed == 0 || c.family == AdemFamily::MinusMinusShifted;
        });
    }
    bool family_holds(AdemFamily f, bool region_only) const
    {
        return std::all_of(cells.begin(), cells.end(), [&](const AdemCell& c) {
            return c.family != f || (region_only && !c.in_region) || c.failed == 0;
        });
    }
    /// cells outside i > 2j, where the relations are reported but not expected
    std::vector<const AdemCell*> flagged() const
    {
        std::vector<const AdemCell*> out;
        for (const auto& c : cells)
            if (!c.in_region)
                out.push_back(&c);
        return out;
    }
};

/// Test the four explicit families on every basis element of the box, for 0 <= j <= j_max and
/// 0 <= i <= i_max. Operation indices follow the precision: i_max = precision, j_max = precision / 2.
inline AdemScanReport adem_scan(PowerOps& ops, int index_max, DegreeBox degree_max, long precision)
{
    AdemScanReport rep;
    rep.precision = precision;
    rep.degree_max = degree_max;
    rep.index_max = index_max;
    rep.i_max = precision;
    rep.j_max = precision / 2;
    CompositeEvaluator ev(ops);
    auto basis = basis_in_box(degree_max, index_max);
    for (long i = 0; i <= rep.i_max; ++i)
        for (long j = 0; j <= rep.j_max; ++j)
            for (AdemFamily f : {AdemFamily::MinusMinus, AdemFamily::PlusPlus, AdemFamily::MinusPlus,
                                 AdemFamily::PlusMinus, AdemFamily::MinusMinusShifted}) {
                AdemCell cell;
                cell.i = i;
                cell.j = j;
                cell.family = f;
                cell.in_region = i > 2 * j;
                Composite lhs = adem_lhs(f, i, j);
                std::vector<Composite> rhs = adem_rhs(f, i, j);
                for (const auto& m : basis) {
                    AlgElement x(m);
                    ++cell.tested;
                    if (ev.eval(lhs, x) != ev.eval(rhs, x)) {
                        if (!cell.failed)
                            cell.first_failure = x;
                        ++cell.failed;
                    }
                }
                rep.cells.push_back(std::move(cell));
            }
    return rep;
}

inline nlohmann::json to_json(const AdemScanReport& rep)
{
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : rep.cells) {
        nlohmann::json j{{"i", c.i},         {"j", c.j},           {"family", to_string(c.family)},
                         {"in_region", c.in_region}, {"tested", c.tested}, {"failed", c.failed}};
        if (c.first_failure)
            j["first_failure"] = format(*c.first_failure);
        cells.push_back(std::move(j));
    }
    return {{"precision", rep.precision},
            {"degree_max", {rep.degree_max.fixed_max, rep.degree_max.sign_max}},
            {"index_max", rep.index_max},
            {"region_holds", rep.region_holds()},
            {"families", [&] {
                 nlohmann::json fam = nlohmann::json::object();
                 for (AdemFamily f : {AdemFamily::MinusMinus, AdemFamily::PlusPlus, AdemFamily::MinusPlus,
                                      AdemFamily::PlusMinus, AdemFamily::MinusMinusShifted})
                     fam[to_string(f)] = {{"region", rep.family_holds(f, true)}, {"everywhere", rep.family_holds(f, false)}};
                 return fam;
             }()},
            {"cells", std::move(cells)}};
}

/// One row per i, one column per j; each cell shows the four families in order
/// (--, ++, -+, +-, then -- with the shifted binomial): '.' holds, 'x' fails. Cells with i <= 2j are bracketed.
inline std::string adem_grid(const AdemScanReport& rep)
{
    std::map<std::pair<long, long>, std::string> marks;
    for (const auto& c : rep.cells)
        marks[{c.i, c.j}] += c.failed ? 'x' : '.';
    std::string out = "   i\\j";
    for (long j = 0; j <= rep.j_max; ++j) {
        std::string h = std::to_string(j);
        out += std::string(7 - h.size(), ' ') + h;
    }
    out += '\n';
    for (long i = 0; i <= rep.i_max; ++i) {
        std::string h = std::to_string(i);
        out += std::string(6 - h.size(), ' ') + h;
        for (long j = 0; j <= rep.j_max; ++j) {
            bool region = i > 2 * j;
            out += std::string(" ") + (region ? ' ' : '[') + marks[{i, j}] + (region ? ' ' : ']');
        }
        out += '\n';
    }
    return out;
}

}  // namespace eqsteenrod
