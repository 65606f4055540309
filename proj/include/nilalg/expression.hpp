#pragma once

// Parser for linear combinations such as
//   "f(y,y,y,(xx)x)+f(x,x,x,(yy)y)"
//   "(x(x(xa))) + 2*((x(xx))a)"
//   "[1 + 2*g]*(x(x(xa))) - 1/2*(x((xx)a))"
// Products are binary (juxtaposition or '*'); numbers and bracketed
// g-polynomials are scalar factors; f, g and J call the linearized forms.

#include "nilalg/element.hpp"
#include "nilalg/forms.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace nilalg {

namespace detail {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const Alphabet &alphabet, GammaPoly gamma)
        : text_(text), alphabet_(alphabet), gamma_(std::move(gamma)) {}

    Element parse() {
        check_balance();
        skip_ws();
        if (at_end())
            throw ParseError(K::EmptyProduct, "empty expression", 0);
        Element e = expr();
        skip_ws();
        if (!at_end())
            throw ParseError(K::UnexpectedCharacter, "unexpected '" + std::string(1, peek()) + "'", pos_);
        return e;
    }

private:
    using K = ParseError::Kind;

    struct Factor {
        bool scalar = false;
        GammaPoly coef;
        Element value;
    };

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void check_balance() const {
        int depth = 0;
        for (std::size_t i = 0; i < text_.size(); ++i) {
            if (text_[i] == '(')
                ++depth;
            else if (text_[i] == ')' && --depth < 0)
                throw ParseError(K::UnbalancedParentheses, "unbalanced ')'", i);
        }
        if (depth != 0)
            throw ParseError(K::UnbalancedParentheses, "unbalanced '('", text_.size());
    }

    Element expr() {
        Element acc;
        bool first = true;
        for (;;) {
            skip_ws();
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = peek() == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            Element t = term();
            if (neg)
                acc -= t;
            else
                acc += t;
            first = false;
        }
        return acc;
    }

    bool starts_factor(char c) const {
        return c == '(' || c == '[' || std::isalnum(static_cast<unsigned char>(c));
    }

    Element term() {
        GammaPoly coef(1);
        std::vector<Element> parts;
        for (;;) {
            skip_ws();
            if (at_end() || !starts_factor(peek()))
                break;
            Factor fa = factor();
            if (fa.scalar)
                coef *= fa.coef;
            else
                parts.push_back(std::move(fa.value));
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (at_end() || !starts_factor(peek()))
                    throw ParseError(K::EmptyProduct, "'*' without right factor", pos_);
            }
        }
        if (parts.empty())
            throw ParseError(K::EmptyProduct, "expected a monomial", pos_);
        if (parts.size() > 2)
            throw ParseError(K::AmbiguousProduct, "product of more than two factors needs parentheses", pos_);
        Element value = parts.size() == 1 ? parts[0] : parts[0] * parts[1];
        return scale(coef, value);
    }

    Factor factor() {
        skip_ws();
        char c = peek();
        Factor out;
        if (c == '(') {
            ++pos_;
            skip_ws();
            if (peek() == ')')
                throw ParseError(K::EmptyProduct, "empty product '()'", pos_);
            out.value = expr();
            skip_ws();
            if (peek() != ')')
                throw ParseError(K::UnbalancedParentheses, "expected ')'", pos_);
            ++pos_;
            return out;
        }
        if (c == '[') {
            auto close = text_.find(']', pos_);
            if (close == std::string_view::npos)
                throw ParseError(K::UnexpectedEnd, "missing ']'", pos_);
            out.scalar = true;
            out.coef = parse_gamma_poly(text_.substr(pos_ + 1, close - pos_ - 1));
            pos_ = close + 1;
            return out;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            if (peek() == '/') {
                ++pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError(K::BadNumber, "bad fraction", pos_);
                while (std::isdigit(static_cast<unsigned char>(peek())))
                    ++pos_;
            }
            out.scalar = true;
            out.coef = GammaPoly(parse_rational(text_.substr(start, pos_ - start)));
            return out;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '(' && (c == 'f' || c == 'g' || c == 'J')) {
                pos_ += 2;
                std::vector<Element> args = arguments();
                out.value = call(c, args, start);
                return out;
            }
            if (alphabet_.single_char()) {
                ++pos_;
            } else {
                while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                    ++pos_;
            }
            std::string name(text_.substr(start, pos_ - start));
            VarId v = alphabet_.find(name);
            if (v < 0)
                throw ParseError(K::UnknownVariable, "unknown variable '" + name + "'", start);
            out.value = Element::var(v);
            return out;
        }
        throw ParseError(K::UnexpectedCharacter, "unexpected '" + std::string(1, c) + "'", pos_);
    }

    std::vector<Element> arguments() {
        std::vector<Element> args;
        for (;;) {
            skip_ws();
            if (peek() == ')' || peek() == ',')
                throw ParseError(K::EmptyProduct, "empty argument", pos_);
            args.push_back(expr());
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() != ')')
                throw ParseError(K::UnbalancedParentheses, "expected ')' after arguments", pos_);
            ++pos_;
            return args;
        }
    }

    Element call(char name, const std::vector<Element> &a, std::size_t at) {
        auto want = [&](std::size_t n) {
            if (a.size() != n)
                throw ParseError(K::BadArity,
                                 std::string(1, name) + " takes " + std::to_string(n) + " arguments", at);
        };
        switch (name) {
        case 'f':
            want(4);
            return nilalg::f(a[0], a[1], a[2], a[3], gamma_);
        case 'g':
            want(4);
            return nilalg::g(a[0], a[1], a[2], a[3]);
        default:
            want(3);
            return J(a[0], a[1], a[2]);
        }
    }

    std::string_view text_;
    const Alphabet &alphabet_;
    GammaPoly gamma_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses and expands a linear combination; f(...) uses the given gamma
/// (symbolic g by default).
inline Element parse_element(std::string_view text, const Alphabet &alphabet = Alphabet(),
                             const GammaPoly &gamma = GammaPoly::gamma()) {
    return detail::ExpressionParser(text, alphabet, gamma).parse();
}

} // namespace nilalg
