#pragma once

// Elements of the free commutative algebra over Q[g]: finite linear
// combinations of canonical monomials.

#include "nilalg/gamma_poly.hpp"
#include "nilalg/monomial.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilalg {

class Element {
public:
    using Terms = std::map<Monomial, GammaPoly>;

    Element() = default;
    Element(const Monomial &m) { terms_.emplace(m, GammaPoly(1)); }  // NOLINT(google-explicit-constructor)
    Element(const Monomial &m, GammaPoly c) {
        if (!c.is_zero())
            terms_.emplace(m, std::move(c));
    }

    static Element var(VarId v) { return Element(Monomial::leaf(v)); }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Terms &terms() const noexcept { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    GammaPoly coefficient(const Monomial &m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GammaPoly{} : it->second;
    }

    /// Adds c * m.
    void add_term(const Monomial &m, const GammaPoly &c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Element &operator+=(const Element &o) {
        for (auto &[m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    Element &operator-=(const Element &o) {
        for (auto &[m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    Element operator-() const {
        Element r;
        for (auto &[m, c] : terms_)
            r.terms_.emplace_hint(r.terms_.end(), m, -c);
        return r;
    }
    friend Element operator+(Element a, const Element &b) { return a += b; }
    friend Element operator-(Element a, const Element &b) { return a -= b; }

    friend Element scale(const GammaPoly &c, const Element &e) {
        Element r;
        if (c.is_zero())
            return r;
        for (auto &[m, v] : e.terms_) {
            GammaPoly p = c * v;
            if (!p.is_zero())
                r.terms_.emplace_hint(r.terms_.end(), m, std::move(p));
        }
        return r;
    }
    friend Element operator*(const GammaPoly &c, const Element &e) { return scale(c, e); }
    friend Element operator*(const Rational &c, const Element &e) { return scale(GammaPoly(c), e); }
    friend Element operator*(long c, const Element &e) { return scale(GammaPoly(c), e); }

    /// Bilinear commutative product.
    friend Element operator*(const Element &a, const Element &b) {
        Element r;
        for (auto &[ma, ca] : a.terms_)
            for (auto &[mb, cb] : b.terms_)
                r.add_term(product(ma, mb), ca * cb);
        return r;
    }

    friend bool operator==(const Element &, const Element &) = default;

    /// Coefficients evaluated at g = gamma.
    Element specialize(const Rational &gamma) const {
        Element r;
        for (auto &[m, c] : terms_)
            r.add_term(m, GammaPoly(c.eval(gamma)));
        return r;
    }

    bool has_constant_coefficients() const {
        return std::all_of(terms_.begin(), terms_.end(), [](auto &t) { return t.second.is_constant(); });
    }

    /// Multidegree shared by every term, or nullopt if inhomogeneous or zero.
    std::optional<Multidegree> homogeneous_multidegree(std::size_t nvars) const {
        std::optional<Multidegree> d;
        for (auto &[m, c] : terms_) {
            Multidegree md = m.multidegree(nvars);
            if (d && *d != md)
                return std::nullopt;
            d = md;
        }
        return d;
    }

    VarId max_var() const {
        VarId v = -1;
        for (auto &[m, c] : terms_)
            v = std::max(v, m.max_var());
        return v;
    }

private:
    Terms terms_;
};

inline Element cube(const Element &e) { return e * (e * e); }

inline Element apply_permutation(const Element &e, const std::vector<VarId> &perm) {
    Element r;
    for (auto &[m, c] : e)
        r.add_term(apply_permutation(m, perm), c);
    return r;
}

/// e + phi(e), phi swapping the first two variables.
inline Element symmetrize(const Element &e) {
    auto phi = swap_xy(static_cast<std::size_t>(std::max<VarId>(e.max_var() + 1, 2)));
    return e + apply_permutation(e, phi);
}

inline bool is_swap_fixed(const Element &e) {
    auto phi = swap_xy(static_cast<std::size_t>(std::max<VarId>(e.max_var() + 1, 2)));
    return apply_permutation(e, phi) == e;
}

/// Terms in monomial order, e.g. "(x(x(xa))) + (2*g)*((x(xx))a)".
/// Non-constant coefficients are parenthesized.
inline std::string render(const Element &e, const Alphabet &alphabet = Alphabet()) {
    if (e.is_zero())
        return "0";
    std::string out;
    for (auto &[m, c] : e) {
        std::string mono = render(m, alphabet);
        if (m.is_leaf())
            mono = "(" + mono + ")";
        if (c.is_constant()) {
            Rational v = c.constant_term();
            bool neg = v < 0;
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            Rational mag = abs(v);
            if (mag != 1)
                out += to_string(mag) + "*";
            out += mono;
        } else {
            out += out.empty() ? "" : " + ";
            out += "(" + to_string(c) + ")*" + mono;
        }
    }
    return out;
}

/// L_{f1} L_{f2} ... L_{fn} (argument); factors[0] is applied last.
struct OperatorString {
    std::vector<Monomial> factors;
    Monomial argument;

    std::size_t length() const noexcept { return factors.size(); }
    int total_degree() const {
        int s = 0;
        for (auto &f : factors)
            s += f.degree();
        return s;
    }
    int max_degree() const {
        int s = 0;
        for (auto &f : factors)
            s = std::max(s, f.degree());
        return s;
    }
    Monomial apply() const {
        Monomial r = argument;
        for (auto it = factors.rbegin(); it != factors.rend(); ++it)
            r = product(*it, r);
        return r;
    }
    friend bool operator==(const OperatorString &, const OperatorString &) = default;
};

inline Element apply_string(const OperatorString &s) { return Element(s.apply()); }

/// Left multiplications by element factors; multilinear in every slot.
inline Element apply_left(std::span<const Element> factors, Element argument) {
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        argument = *it * argument;
    return argument;
}

inline std::string render(const OperatorString &s, const Alphabet &alphabet = Alphabet()) {
    std::string out;
    for (auto &f : s.factors)
        out += "L_" + render(f, alphabet) + " ";
    return out + "(" + render(s.argument, alphabet) + ")";
}

/// Basis of a subspace of swap-fixed elements. Each vector is m + phi(m)
/// for a non-fixed representative m, or a single fixed monomial.
struct SymBasis {
    std::vector<Element> vectors;
    std::vector<Monomial> representatives;
    std::vector<std::string> labels;

    std::size_t size() const noexcept { return vectors.size(); }
};

/// Result of expressing an element in a basis. `coords` is empty when the
/// element is not in the span; `residual` is what the coordinates fail to
/// account for (zero on success).
struct Coordinates {
    std::optional<std::vector<GammaPoly>> coords;
    Element residual;

    bool in_span() const noexcept { return coords.has_value(); }
};

inline Coordinates coordinates(const Element &e, const std::vector<Monomial> &basis) {
    Coordinates out;
    std::vector<GammaPoly> c(basis.size());
    Element covered;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        c[i] = e.coefficient(basis[i]);
        covered.add_term(basis[i], c[i]);
    }
    out.residual = e - covered;
    if (out.residual.is_zero())
        out.coords = std::move(c);
    return out;
}

inline Coordinates coordinates(const Element &e, const SymBasis &basis) {
    if (!is_swap_fixed(e))
        throw std::invalid_argument("coordinates: element is not fixed by the variable swap");
    std::vector<GammaPoly> c(basis.size());
    Element recombined;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        c[i] = e.coefficient(basis.representatives[i]);
        recombined += scale(c[i], basis.vectors[i]);
    }
    Coordinates out;
    out.residual = e - recombined;
    if (out.residual.is_zero())
        out.coords = std::move(c);
    return out;
}

} // namespace nilalg
