#pragma once

// Polynomials without constant term in a few commuting variables, truncated
// above a fixed degree: an associative commutative algebra, nilpotent of
// index D+1. Free-algebra elements evaluate into it homomorphically.

#include "nilalg/element.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace nilalg {

class TruncatedPolyModel {
public:
    using Exponents = std::vector<int>;
    using Value = std::map<Exponents, Rational>;  // no zero coefficients, no constant term

    TruncatedPolyModel(std::size_t nvars, int max_degree) : nvars_(nvars), max_degree_(max_degree) {
        if (nvars == 0 || max_degree < 1)
            throw std::invalid_argument("TruncatedPolyModel: need at least one variable and degree >= 1");
    }

    std::size_t variables() const noexcept { return nvars_; }
    int max_degree() const noexcept { return max_degree_; }

    /// c * t1^e1 ... tk^ek; zero if the degree exceeds the truncation.
    Value monomial(const Exponents &e, const Rational &c = 1) const {
        if (e.size() != nvars_)
            throw std::invalid_argument("TruncatedPolyModel: exponent vector has the wrong length");
        int deg = 0;
        for (int x : e)
            deg += x;
        if (deg < 1)
            throw std::invalid_argument("TruncatedPolyModel: constants are not elements");
        Value v;
        if (deg <= max_degree_ && c != 0)
            v.emplace(e, c);
        return v;
    }

    Value generator(std::size_t i) const {
        Exponents e(nvars_, 0);
        e.at(i) = 1;
        return monomial(e);
    }

    Value add(const Value &a, const Value &b) const {
        Value r = a;
        for (auto &[e, c] : b) {
            Rational &slot = r[e];
            slot += c;
            if (slot == 0)
                r.erase(e);
        }
        return r;
    }

    Value scale(const Rational &s, const Value &a) const {
        Value r;
        if (s == 0)
            return r;
        for (auto &[e, c] : a)
            r.emplace(e, s * c);
        return r;
    }

    Value multiply(const Value &a, const Value &b) const {
        Value r;
        for (auto &[ea, ca] : a)
            for (auto &[eb, cb] : b) {
                Exponents e(nvars_);
                int deg = 0;
                for (std::size_t i = 0; i < nvars_; ++i)
                    deg += e[i] = ea[i] + eb[i];
                if (deg > max_degree_)
                    continue;
                Rational &slot = r[e];
                slot += ca * cb;
                if (slot == 0)
                    r.erase(e);
            }
        return r;
    }

    /// Image of a free-algebra element with constant coefficients under the
    /// homomorphism sending variable i to assignment[i].
    Value evaluate(const Element &e, const std::vector<Value> &assignment) const {
        Value r;
        std::map<Monomial, Value> memo;
        for (auto &[m, c] : e) {
            if (!c.is_constant())
                throw std::invalid_argument("TruncatedPolyModel: coefficient depends on g; specialize first");
            r = add(r, scale(c.constant_term(), evaluate(m, assignment, memo)));
        }
        return r;
    }

    /// Random element: each monomial of degree <= max_degree gets a
    /// coefficient in [-bound, bound] with probability 1/2.
    Value random(std::mt19937_64 &rng, int bound = 3) const {
        Value r;
        std::uniform_int_distribution<int> coef(-bound, bound);
        std::bernoulli_distribution keep(0.5);
        for_each_exponent([&](const Exponents &e) {
            if (keep(rng)) {
                int c = coef(rng);
                if (c != 0)
                    r.emplace(e, Rational(c));
            }
        });
        return r;
    }

    /// Every exponent vector of degree 1..max_degree, graded then lexicographic.
    template <typename Fn>
    void for_each_exponent(Fn &&fn) const {
        Exponents e(nvars_, 0);
        for (int deg = 1; deg <= max_degree_; ++deg)
            distribute(e, 0, deg, fn);
    }

private:
    Value evaluate(const Monomial &m, const std::vector<Value> &assignment, std::map<Monomial, Value> &memo) const {
        if (m.is_leaf())
            return assignment.at(static_cast<std::size_t>(m.var()));
        if (auto it = memo.find(m); it != memo.end())
            return it->second;
        Value v = multiply(evaluate(m.left(), assignment, memo), evaluate(m.right(), assignment, memo));
        memo.emplace(m, v);
        return v;
    }

    template <typename Fn>
    void distribute(Exponents &e, std::size_t i, int left, Fn &fn) const {
        if (i + 1 == nvars_) {
            e[i] = left;
            fn(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            distribute(e, i + 1, left - k, fn);
        }
    }

    std::size_t nvars_;
    int max_degree_;
};

inline std::string render(const TruncatedPolyModel::Value &v, const Alphabet &alphabet = Alphabet::indexed(8)) {
    if (v.empty())
        return "0";
    std::string out;
    for (auto &[e, c] : v) {
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        Rational mag = abs(c);
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            mono += (mono.empty() ? "" : "*") + alphabet.name(static_cast<VarId>(i));
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        out += (mag != 1 ? to_string(mag) + "*" : "") + mono;
    }
    return out;
}

} // namespace nilalg
