#pragma once

// Text form of operator strings and their combinations:
//   "x;x;y;y"                  L_x L_x L_y L_y (a)
//   "x;(xy);y"                 factors are monomials
//   "x;y;x + x;x;y - 2*y;x;x"  combinations, one common length
//   "[4g^2-1]*x;x;y;y"         g-polynomial coefficients
// Factors are separated by ';' (',' is accepted as a synonym). The argument
// is always the variable named "a".

#include "nilalg/consequence.hpp"

#include <string>
#include <string_view>

namespace nilalg {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

inline Monomial string_argument(const Alphabet &alphabet) {
    VarId a = alphabet.find("a");
    if (a < 0)
        throw ParseError(ParseError::Kind::UnknownVariable, "the alphabet has no argument variable 'a'", 0);
    return Monomial::leaf(a);
}

} // namespace detail

inline OperatorString parse_operator_string(std::string_view text, const Alphabet &alphabet = Alphabet()) {
    using K = ParseError::Kind;
    OperatorString s{{}, detail::string_argument(alphabet)};
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] != ';' && text[i] != ',')
            continue;
        std::string_view part = detail::trim(text.substr(start, i - start));
        if (part.empty())
            throw ParseError(K::EmptyProduct, "empty factor in operator string", start);
        try {
            s.factors.push_back(parse_monomial(part, alphabet));
        } catch (const ParseError &e) {
            throw ParseError(e.kind(), e.what(), start + e.position());
        }
        start = i + 1;
    }
    return s;
}

inline StringCombination parse_string_combination(std::string_view text, const Alphabet &alphabet = Alphabet()) {
    using K = ParseError::Kind;
    StringCombination out;
    if (detail::trim(text).empty())
        throw ParseError(K::EmptyProduct, "empty operator string", 0);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= text.size())
            break;
        bool neg = false;
        if (text[pos] == '+' || text[pos] == '-') {
            neg = text[pos] == '-';
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError(K::UnexpectedCharacter, "expected '+' or '-'", pos);
        }
        first = false;
        GammaPoly coef(1);
        // Optional "c*" or "[poly]*" prefix.
        if (pos < text.size() && (text[pos] == '[' || std::isdigit(static_cast<unsigned char>(text[pos])))) {
            std::size_t star = text.find('*', pos);
            if (star == std::string_view::npos)
                throw ParseError(K::UnexpectedEnd, "coefficient without '*'", pos);
            std::string_view c = detail::trim(text.substr(pos, star - pos));
            if (c.front() == '[') {
                if (c.back() != ']')
                    throw ParseError(K::UnexpectedCharacter, "expected ']'", star);
                coef = parse_gamma_poly(c.substr(1, c.size() - 2));
            } else {
                coef = GammaPoly(parse_rational(c));
            }
            pos = star + 1;
        }
        // The string runs to the next top-level sign.
        std::size_t end = pos;
        int depth = 0;
        while (end < text.size()) {
            char ch = text[end];
            if (ch == '(')
                ++depth;
            else if (ch == ')')
                --depth;
            else if ((ch == '+' || ch == '-') && depth == 0)
                break;
            ++end;
        }
        try {
            out.push_back({neg ? -coef : coef, parse_operator_string(text.substr(pos, end - pos), alphabet)});
        } catch (const ParseError &e) {
            throw ParseError(e.kind(), e.what(), pos + e.position());
        }
        pos = end;
    }
    for (auto &t : out)
        if (t.string.length() != out.front().string.length())
            throw ParseError(K::BadArity, "strings of different lengths in one combination", 0);
    return out;
}

inline std::string render(const StringCombination &combo, const Alphabet &alphabet = Alphabet()) {
    if (combo.empty())
        return "0";
    std::string out;
    for (auto &t : combo) {
        std::string body;
        for (auto &f : t.string.factors)
            body += "L_" + render(f, alphabet) + " ";
        const GammaPoly &c = t.coefficient;
        if (c.is_constant()) {
            Rational v = c.constant_term();
            out += out.empty() ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + ");
            if (abs(v) != 1)
                out += to_string(Rational(abs(v))) + " ";
        } else {
            out += (out.empty() ? "(" : " + (") + to_string(c) + ") ";
        }
        out += body.substr(0, body.size() - 1);
    }
    return out + " (" + render(combo.front().string.argument, alphabet) + ")";
}

} // namespace nilalg
