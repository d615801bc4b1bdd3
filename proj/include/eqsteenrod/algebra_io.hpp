#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "algebra.hpp"

namespace eqsteenrod {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what), position(pos)
    {
    }
    std::size_t position;
};

inline std::string format(const GenMonomial& m)
{
    std::string out;
    auto put = [&](const std::string& name, int e) {
        if (e == 0)
            return;
        if (!out.empty())
            out += '*';
        out += name;
        if (e > 1)
            out += '^' + std::to_string(e);
    };
    put("u", m.u);
    put("a", m.a);
    for (int i = 0; i <= kMaxIndex; ++i)
        put("tau_" + std::to_string(i), m.has_tau(i) ? 1 : 0);
    for (int i = 1; i <= kMaxIndex; ++i)
        put("xi_" + std::to_string(i), m.xi_exp(i));
    return out.empty() ? "1" : out;
}

inline std::string format(const AlgElement& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (const auto& m : x.terms()) {
        if (!out.empty())
            out += " + ";
        out += format(m);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const AlgElement& x) { return os << format(x); }
inline std::ostream& operator<<(std::ostream& os, const GenMonomial& m) { return os << format(m); }

inline nlohmann::json to_json(const GenMonomial& m)
{
    nlohmann::json xi = nlohmann::json::object();
    for (int i = 1; i <= kMaxIndex; ++i)
        if (m.xi_exp(i))
            xi[std::to_string(i)] = m.xi_exp(i);
    nlohmann::json tau = nlohmann::json::array();
    for (int i = 0; i <= kMaxIndex; ++i)
        if (m.has_tau(i))
            tau.push_back(i);
    return {{"u", m.u}, {"a", m.a}, {"xi", xi}, {"tau", tau}};
}

inline nlohmann::json to_json(const AlgElement& x)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& m : x.terms())
        out.push_back(to_json(m));
    return out;
}

inline GenMonomial monomial_from_json(const nlohmann::json& j)
{
    GenMonomial m;
    m.u = j.value("u", 0);
    m.a = j.value("a", 0);
    if (j.contains("xi"))
        for (const auto& [key, e] : j.at("xi").items()) {
            int i = std::stoi(key);
            GenMonomial::check_index(i);
            if (i < 1)
                throw UnknownGenerator("xi index must be >= 1");
            m.xi[i - 1] = e.get<int>();
        }
    // tau listed twice would square; normalize through multiplication.
    AlgElement result = AlgElement(m);
    if (j.contains("tau")) {
        for (const auto& i : j.at("tau")) {
            result = result * AlgElement::tau(i.get<int>());
        }
        if (result.size() != 1)
            throw std::invalid_argument("monomial JSON repeats a tau index");
    }
    return result.terms()[0];
}

inline AlgElement element_from_json(const nlohmann::json& j)
{
    AlgElement x;
    for (const auto& m : j)
        x += AlgElement(monomial_from_json(m));
    return x;
}

namespace detail {

    /// Character cursor shared by the element and expression parsers.
    class Cursor {
    public:
        explicit Cursor(std::string_view text) : text_(text) {}

        void skip_ws()
        {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        bool at_end()
        {
            skip_ws();
            return pos_ >= text_.size();
        }
        char peek()
        {
            skip_ws();
            return pos_ < text_.size() ? text_[pos_] : '\0';
        }
        bool accept(char ch)
        {
            if (peek() == ch) {
                ++pos_;
                return true;
            }
            return false;
        }
        void expect(char ch)
        {
            if (!accept(ch))
                fail(std::string("expected '") + ch + "'");
        }
        long integer()
        {
            skip_ws();
            std::size_t start = pos_;
            if (pos_ < text_.size() && text_[pos_] == '-')
                ++pos_;
            std::size_t digits = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == digits) {
                pos_ = start;
                fail("expected an integer");
            }
            if (pos_ - digits > 9)
                fail("integer too large");
            return std::stol(std::string(text_.substr(start, pos_ - start)));
        }
        // identifier: letters, digits, underscores, starting with a letter
        std::string identifier()
        {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return std::string(text_.substr(start, pos_ - start));
        }
        std::size_t pos() const { return pos_; }
        void set_pos(std::size_t p) { pos_ = p; }
        [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    private:
        std::string_view text_;
        std::size_t pos_ = 0;
    };

    class ElementParser {
    public:
        explicit ElementParser(std::string_view text) : cur_(text) {}

        AlgElement parse()
        {
            AlgElement x = sum();
            if (!cur_.at_end())
                cur_.fail("unexpected trailing input");
            return x;
        }

    private:
        AlgElement sum()
        {
            AlgElement x = product();
            while (cur_.accept('+'))
                x += product();
            return x;
        }
        AlgElement product()
        {
            AlgElement x = power();
            while (cur_.accept('*'))
                x = x * power();
            return x;
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
                cur_.fail("expected a generator");
            try {
                return AlgElement::gen(parse_generator(name));
            } catch (const UnknownGenerator& e) {
                throw ParseError(e.what(), at);
            }
        }

        Cursor cur_;
    };

}  // namespace detail

/// Parses u, a, xi_i, tau_i, 0, 1 combined with +, *, ^ and parentheses.
inline AlgElement parse_element(std::string_view text) { return detail::ElementParser(text).parse(); }

}  // namespace eqsteenrod
