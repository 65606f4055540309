#pragma once

// Arbitrary-precision integers and rationals (GMP) plus the text formats
// used throughout the engine: "p/q", or "p" when q = 1.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nilalg {

using Integer = mpz_class;
using Rational = mpq_class;

class ParseError : public std::runtime_error {
public:
    enum class Kind {
        UnbalancedParentheses,
        UnknownVariable,
        EmptyProduct,
        AmbiguousProduct,
        BadNumber,
        UnexpectedCharacter,
        UnexpectedEnd,
        NotAMonomial,
        BadArity,
    };

    ParseError(Kind kind, std::string message, std::size_t position = 0)
        : std::runtime_error(std::move(message)), kind_(kind), position_(position) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer &num, const Integer &den) {
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Integer &z) { return z.get_str(); }

inline std::string to_string(const Rational &r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p", "-p", "p/q" (q nonzero). Surrounding whitespace is ignored.
inline Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-'))
            ++i;
        if (i == s.size())
            throw ParseError(ParseError::Kind::BadNumber, "bad integer '" + std::string(s) + "'");
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j])))
                throw ParseError(ParseError::Kind::BadNumber,
                                 "bad integer '" + std::string(s) + "'");
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return Integer(digits, 10);
    };
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw ParseError(ParseError::Kind::BadNumber, "zero denominator in '" + std::string(text) + "'");
    return make_rational(parse_int(text.substr(0, slash)), den);
}

inline Integer pow2(unsigned long exponent) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
    return r;
}

inline Integer ipow(const Integer &base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

inline Rational rpow(const Rational &base, unsigned long exponent) {
    Rational r(1);
    for (unsigned long i = 0; i < exponent; ++i)
        r *= base;
    return r;
}

} // namespace nilalg
