#pragma once

// Univariate polynomials in the identity parameter gamma over Q.
// Rendered as "c0 + c1*g + c2*g^2 + ...".

#include "nilalg/rational.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilalg {

class GammaPoly {
public:
    GammaPoly() = default;
    GammaPoly(const Rational &c) {  // NOLINT(google-explicit-constructor)
        if (c != 0)
            coeffs_.push_back(c);
    }
    GammaPoly(long c) : GammaPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit GammaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    GammaPoly(std::initializer_list<long> coeffs) {
        for (long c : coeffs)
            coeffs_.emplace_back(c);
        trim();
    }

    /// The polynomial g.
    static GammaPoly gamma() { return GammaPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    /// c * g^k
    static GammaPoly monomial(const Rational &c, std::size_t k) {
        if (c == 0)
            return {};
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return GammaPoly(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational> &coefficients() const noexcept { return coeffs_; }

    Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    Rational constant_term() const { return coefficient(0); }

    Rational eval(const Rational &r) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= r;
            acc += *it;
        }
        return acc;
    }

    GammaPoly operator-() const {
        GammaPoly r = *this;
        for (auto &c : r.coeffs_)
            c = -c;
        return r;
    }

    GammaPoly &operator+=(const GammaPoly &o) {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    GammaPoly &operator-=(const GammaPoly &o) {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    GammaPoly &operator*=(const Rational &c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto &x : coeffs_)
            x *= c;
        return *this;
    }

    friend GammaPoly operator+(GammaPoly a, const GammaPoly &b) { return a += b; }
    friend GammaPoly operator-(GammaPoly a, const GammaPoly &b) { return a -= b; }
    friend GammaPoly operator*(GammaPoly a, const Rational &c) { return a *= c; }
    friend GammaPoly operator*(const Rational &c, GammaPoly a) { return a *= c; }

    friend GammaPoly operator*(const GammaPoly &a, const GammaPoly &b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return GammaPoly(std::move(v));
    }
    GammaPoly &operator*=(const GammaPoly &o) { return *this = *this * o; }

    friend bool operator==(const GammaPoly &, const GammaPoly &) = default;

    /// Quotient and remainder by a nonzero divisor.
    friend std::pair<GammaPoly, GammaPoly> divmod(const GammaPoly &num, const GammaPoly &den) {
        if (den.is_zero())
            throw std::domain_error("polynomial division by zero");
        std::vector<Rational> rem = num.coeffs_;
        if (rem.size() < den.coeffs_.size())
            return {GammaPoly{}, num};
        std::vector<Rational> quot(rem.size() - den.coeffs_.size() + 1);
        const Rational &lead = den.coeffs_.back();
        for (std::size_t k = quot.size(); k-- > 0;) {
            Rational q = rem[k + den.coeffs_.size() - 1] / lead;
            quot[k] = q;
            if (q == 0)
                continue;
            for (std::size_t j = 0; j < den.coeffs_.size(); ++j)
                rem[k + j] -= q * den.coeffs_[j];
        }
        return {GammaPoly(std::move(quot)), GammaPoly(std::move(rem))};
    }

    /// Exact division; throws if the divisor does not divide.
    friend GammaPoly exact_div(const GammaPoly &num, const GammaPoly &den) {
        auto [q, r] = divmod(num, den);
        if (!r.is_zero())
            throw std::domain_error("polynomial division is not exact");
        return q;
    }

    GammaPoly pow(unsigned n) const {
        GammaPoly r(1);
        for (unsigned i = 0; i < n; ++i)
            r *= *this;
        return r;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline std::string to_string(const GammaPoly &p) {
    if (p.is_zero())
        return "0";
    std::string out;
    const auto &c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0)
            continue;
        Rational mag = abs(c[i]);
        bool neg = c[i] < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (i == 0) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1)
            out += to_string(mag) + "*";
        out += "g";
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out;
}

/// Inverse of to_string; also accepts "c*g^i" or "cg^i" terms in any order and repeated.
inline GammaPoly parse_gamma_poly(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw ParseError(ParseError::Kind::UnexpectedEnd, "empty polynomial");
    GammaPoly result;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool neg = false;
        if (s[pos] == '+' || s[pos] == '-') {
            neg = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw ParseError(ParseError::Kind::UnexpectedCharacter, "expected '+' or '-'", pos);
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-')
            ++end;
        std::string term = s.substr(pos, end - pos);
        if (term.empty())
            throw ParseError(ParseError::Kind::UnexpectedEnd, "empty term in polynomial", pos);
        Rational coef(1);
        std::size_t power = 0;
        auto gpos = term.find('g');
        if (gpos == std::string::npos) {
            coef = parse_rational(term);
        } else {
            std::string head = term.substr(0, gpos);
            std::string tail = term.substr(gpos + 1);
            if (!head.empty() && head.back() == '*')
                head.pop_back();  // "2*g" and "2g" are both accepted
            if (!head.empty())
                coef = parse_rational(head);
            power = 1;
            if (!tail.empty()) {
                if (tail[0] != '^' || tail.size() < 2)
                    throw ParseError(ParseError::Kind::UnexpectedCharacter, "expected '^' after g", pos);
                for (std::size_t k = 1; k < tail.size(); ++k)
                    if (!std::isdigit(static_cast<unsigned char>(tail[k])))
                        throw ParseError(ParseError::Kind::BadNumber, "bad exponent", pos);
                power = std::stoul(tail.substr(1));
            }
        }
        result += GammaPoly::monomial(neg ? Rational(-coef) : coef, power);
        pos = end;
    }
    return result;
}

/// Unique polynomial of degree < points.size() through the given points
/// (Newton divided differences). Abscissae must be distinct.
inline GammaPoly interpolate(std::span<const std::pair<Rational, Rational>> points) {
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate: duplicate abscissa " + to_string(points[i].first));
    std::vector<Rational> dd(n);
    for (std::size_t i = 0; i < n; ++i)
        dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
        }
    // Horner on the Newton form.
    GammaPoly result;
    for (std::size_t i = n; i-- > 0;) {
        result *= GammaPoly(std::vector<Rational>{-points[i].first, Rational(1)});
        result += GammaPoly(dd[i]);
    }
    return result;
}

inline GammaPoly interpolate(const std::vector<std::pair<Rational, Rational>> &points) {
    return interpolate(std::span<const std::pair<Rational, Rational>>(points));
}

} // namespace nilalg
