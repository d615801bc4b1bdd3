#pragma once

// Expression language for the command line.
//
//   top     := 'psi' '(' sum ')' | 'series' '(' sum ')' | sum
//   sum     := product ('+' product)*
//   product := unary ('*' unary)*
//   unary   := 'Q' '[' int (',' int)? ']' unary | power
//   power   := atom ('^' int)?
//   atom    := '(' sum ')' | int | 'chi' '(' sum ')' | generator
//
// Q[i] is Q^{i rho} and Q[i,1] is Q^{i rho - 1}; an operation applies to the following power,
// so Q[1] tau_0*xi_1 means (Q[1] tau_0)*xi_1.

#include <string>
#include <variant>

#include <json.hpp>

#include "algebra_io.hpp"
#include "hopf.hpp"
#include "power_ops.hpp"

namespace eqsteenrod {

using EvalValue = std::variant<AlgElement, Tensor2, STSeries>;

namespace detail {

    class ExprParser {
    public:
        ExprParser(std::string_view text, PowerOps& ops, long precision) : cur_(text), ops_(ops), precision_(precision) {}

        EvalValue parse()
        {
            std::size_t start = cur_.pos();
            std::string head = cur_.identifier();
            if ((head == "psi" || head == "series") && cur_.peek() == '(') {
                cur_.expect('(');
                AlgElement x = sum();
                cur_.expect(')');
                finish();
                if (head == "psi")
                    return psi(x);
                return ops_.q_total(x, precision_);
            }
            cur_.set_pos(start);
            AlgElement x = sum();
            finish();
            return x;
        }

    private:
        void finish()
        {
            if (!cur_.at_end())
                cur_.fail("unexpected trailing input");
        }

        AlgElement sum()
        {
            AlgElement x = product();
            while (cur_.accept('+'))
                x += product();
            return x;
        }
        AlgElement product()
        {
            AlgElement x = unary();
            while (cur_.accept('*'))
                x = x * unary();
            return x;
        }
        AlgElement unary()
        {
            std::size_t start = cur_.pos();
            std::string name = cur_.identifier();
            if (name == "Q" && cur_.peek() == '[') {
                cur_.expect('[');
                long i = cur_.integer();
                long eps = 0;
                if (cur_.accept(','))
                    eps = cur_.integer();
                if (eps != 0 && eps != 1)
                    cur_.fail("second index of Q[i,b] must be 0 or 1");
                cur_.expect(']');
                AlgElement x = unary();
                return ops_.q_op(x, i, int(eps));
            }
            cur_.set_pos(start);
            return power();
        }
        AlgElement power()
        {
            AlgElement x = atom();
            if (cur_.accept('^')) {
                long e = cur_.integer();
                if (e < 0)
                    cur_.fail("negative exponent");
                x = x.pow(unsigned(e));
            }
            return x;
        }
        AlgElement atom()
        {
            if (cur_.accept('(')) {
                AlgElement x = sum();
                cur_.expect(')');
                return x;
            }
            char ch = cur_.peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                long v = cur_.integer();
                return (v & 1) ? AlgElement::one() : AlgElement::zero();
            }
            std::size_t at = cur_.pos();
            std::string name = cur_.identifier();
            if (name.empty())
                cur_.fail("expected a generator, Q[...], chi(...) or '('");
            if (name == "chi") {
                cur_.expect('(');
                AlgElement x = sum();
                cur_.expect(')');
                return chi(x);
            }
            if (name == "psi" || name == "series")
                throw ParseError(name + "(...) is only allowed as the whole expression", at);
            try {
                return AlgElement::gen(parse_generator(name));
            } catch (const UnknownGenerator& e) {
                throw ParseError(e.what(), at);
            }
        }

        Cursor cur_;
        PowerOps& ops_;
        long precision_;
    };

}  // namespace detail

/// Parse and evaluate; series(...) is computed modulo t^precision.
inline EvalValue evaluate_expression(std::string_view text, PowerOps& ops, long precision)
{
    return detail::ExprParser(text, ops, precision).parse();
}

inline std::string format_series(const STSeries& f) { return format_series(f, [](const AlgElement& x) { return format(x); }); }

inline std::string format(const EvalValue& v)
{
    return std::visit(
        [](const auto& x) -> std::string {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, STSeries>)
                return format_series(x);
            else
                return format(x);
        },
        v);
}

inline nlohmann::json series_to_json(const STSeries& f)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, y] : f.terms())
        terms.push_back({{"s", m.s}, {"t", m.t}, {"coefficient", to_json(y)}});
    return {{"precision", f.t_prec()}, {"terms", std::move(terms)}};
}

inline nlohmann::json to_json(const EvalValue& v)
{
    if (auto* x = std::get_if<AlgElement>(&v))
        return {{"type", "element"}, {"text", format(*x)}, {"value", to_json(*x)}};
    if (auto* z = std::get_if<Tensor2>(&v))
        return {{"type", "tensor"}, {"text", format(*z)}, {"value", to_json(*z)}};
    const auto& f = std::get<STSeries>(v);
    return {{"type", "series"}, {"text", format_series(f)}, {"value", series_to_json(f)}};
}

/// Rows (i, eps, Q^{i rho - eps} g) for every t-exponent i - eps below the precision, from the
/// lowest stored exponent (or 0) upward.
struct TableRow {
    long i;
    int eps;
    AlgElement value;
};

inline std::vector<TableRow> export_table(PowerOps& ops, const AlgElement& g, long precision)
{
    STSeries q = ops.q_total(g, precision);
    std::vector<TableRow> rows;
    for (long k = std::min(0L, q.t_floor()); k < precision; ++k)
        for (int eps = 0; eps <= 1; ++eps)
            rows.push_back({k + eps, eps, q.extract(k + eps, eps)});
    return rows;
}

}  // namespace eqsteenrod
