#pragma once

// Monomials of the free commutative nonassociative magma, kept in canonical
// form: in every product the left factor is <= the right factor under
//   total degree, then leaf < product, then variable index for leaves,
//   then (left, right) lexicographically for products.

#include "nilalg/rational.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilalg {

using VarId = int;

/// Display names for variables. Single-character alphabets render by
/// juxtaposition ("(x(xy))"); longer names render with '*'.
class Alphabet {
public:
    Alphabet() : Alphabet(default_names()) {}
    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
        single_char_ = true;
        for (auto &n : names_) {
            if (n.empty())
                throw std::invalid_argument("Alphabet: empty variable name");
            single_char_ = single_char_ && n.size() == 1;
        }
    }

    /// t1, t2, ..., tk
    static Alphabet indexed(std::size_t k) {
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= k; ++i)
            names.push_back("t" + std::to_string(i));
        return Alphabet(std::move(names));
    }

    /// x, y, z, a, b, ... ; f and g are reserved (function name, gamma).
    static std::vector<std::string> default_names() {
        std::vector<std::string> names;
        for (char c : std::string_view("xyzabcdehijklmnopqrstuvw"))
            names.emplace_back(1, c);
        return names;
    }

    std::size_t size() const noexcept { return names_.size(); }
    bool single_char() const noexcept { return single_char_; }
    const std::string &name(VarId v) const {
        if (v < 0 || static_cast<std::size_t>(v) >= names_.size())
            throw std::out_of_range("Alphabet: variable index " + std::to_string(v) + " out of range");
        return names_[static_cast<std::size_t>(v)];
    }
    /// -1 if unknown.
    VarId find(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name)
                return static_cast<VarId>(i);
        return -1;
    }

private:
    std::vector<std::string> names_;
    bool single_char_ = true;
};

class Multidegree {
public:
    Multidegree() = default;
    explicit Multidegree(std::size_t nvars) : exps_(nvars, 0) {}
    Multidegree(std::initializer_list<int> exps) : exps_(exps) {}
    explicit Multidegree(std::vector<int> exps) : exps_(std::move(exps)) {}

    static Multidegree unit(std::size_t nvars, VarId v) {
        Multidegree d(nvars);
        d.exps_.at(static_cast<std::size_t>(v)) = 1;
        return d;
    }

    std::size_t size() const noexcept { return exps_.size(); }
    int operator[](std::size_t i) const { return exps_[i]; }
    int &operator[](std::size_t i) { return exps_[i]; }
    const std::vector<int> &exponents() const noexcept { return exps_; }
    int total() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
    bool is_zero() const { return total() == 0; }

    /// Componentwise <=.
    bool divides(const Multidegree &o) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_.at(i))
                return false;
        return true;
    }

    Multidegree &operator+=(const Multidegree &o) {
        check(o);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            exps_[i] += o.exps_[i];
        return *this;
    }
    Multidegree &operator-=(const Multidegree &o) {
        check(o);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            exps_[i] -= o.exps_[i];
        return *this;
    }
    friend Multidegree operator+(Multidegree a, const Multidegree &b) { return a += b; }
    friend Multidegree operator-(Multidegree a, const Multidegree &b) { return a -= b; }

    friend bool operator==(const Multidegree &, const Multidegree &) = default;
    friend auto operator<=>(const Multidegree &, const Multidegree &) = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < exps_.size(); ++i)
            s += (i ? "," : "") + std::to_string(exps_[i]);
        return s + ")";
    }

private:
    void check(const Multidegree &o) const {
        if (o.exps_.size() != exps_.size())
            throw std::invalid_argument("Multidegree: variable count mismatch");
    }
    std::vector<int> exps_;
};

class Monomial {
public:
    static Monomial leaf(VarId v) {
        if (v < 0)
            throw std::invalid_argument("Monomial::leaf: negative variable index");
        auto n = std::make_shared<Node>();
        n->var = v;
        n->degree = 1;
        n->hash = mix(0x9e3779b97f4a7c15ULL, static_cast<std::size_t>(v) + 1);
        return Monomial(std::move(n));
    }

    /// Canonical product; commutative by construction.
    friend Monomial product(const Monomial &a, const Monomial &b) {
        const bool swap = compare(b, a) < 0;
        const Monomial &l = swap ? b : a;
        const Monomial &r = swap ? a : b;
        auto n = std::make_shared<Node>();
        n->left = l.node_;
        n->right = r.node_;
        n->degree = l.node_->degree + r.node_->degree;
        n->hash = mix(mix(0x51ed270b2743a1c3ULL, l.node_->hash), r.node_->hash);
        return Monomial(std::move(n));
    }

    bool is_leaf() const noexcept { return node_->var >= 0; }
    VarId var() const {
        if (!is_leaf())
            throw std::logic_error("Monomial::var on a product");
        return node_->var;
    }
    Monomial left() const {
        if (is_leaf())
            throw std::logic_error("Monomial::left on a leaf");
        return Monomial(node_->left);
    }
    Monomial right() const {
        if (is_leaf())
            throw std::logic_error("Monomial::right on a leaf");
        return Monomial(node_->right);
    }
    int degree() const noexcept { return static_cast<int>(node_->degree); }
    std::size_t hash() const noexcept { return node_->hash; }

    VarId max_var() const {
        if (is_leaf())
            return node_->var;
        return std::max(left().max_var(), right().max_var());
    }

    void add_multidegree(Multidegree &d) const {
        if (is_leaf()) {
            d[static_cast<std::size_t>(node_->var)] += 1;
            return;
        }
        left().add_multidegree(d);
        right().add_multidegree(d);
    }

    Multidegree multidegree(std::size_t nvars) const {
        if (static_cast<std::size_t>(max_var()) >= nvars)
            throw std::out_of_range("Monomial::multidegree: variable outside declared range");
        Multidegree d(nvars);
        add_multidegree(d);
        return d;
    }

    bool contains_var(VarId v) const {
        if (is_leaf())
            return node_->var == v;
        return left().contains_var(v) || right().contains_var(v);
    }

    friend std::strong_ordering compare(const Monomial &a, const Monomial &b) {
        return compare_nodes(a.node_.get(), b.node_.get());
    }
    friend bool operator==(const Monomial &a, const Monomial &b) {
        return a.node_ == b.node_ || (a.node_->hash == b.node_->hash && compare(a, b) == 0);
    }
    friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b) { return compare(a, b); }

private:
    struct Node {
        int var = -1;
        unsigned degree = 0;
        std::size_t hash = 0;
        std::shared_ptr<const Node> left, right;
    };

    explicit Monomial(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static std::size_t mix(std::size_t h, std::size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    static std::strong_ordering compare_nodes(const Node *a, const Node *b) {
        if (a == b)
            return std::strong_ordering::equal;
        if (auto c = a->degree <=> b->degree; c != 0)
            return c;
        const bool al = a->var >= 0, bl = b->var >= 0;
        if (al != bl)
            return al ? std::strong_ordering::less : std::strong_ordering::greater;
        if (al)
            return a->var <=> b->var;
        if (auto c = compare_nodes(a->left.get(), b->left.get()); c != 0)
            return c;
        return compare_nodes(a->right.get(), b->right.get());
    }

    std::shared_ptr<const Node> node_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const noexcept { return m.hash(); }
};

inline std::string render(const Monomial &m, const Alphabet &alphabet = Alphabet()) {
    if (m.is_leaf())
        return alphabet.name(m.var());
    std::string sep = alphabet.single_char() ? "" : "*";
    return "(" + render(m.left(), alphabet) + sep + render(m.right(), alphabet) + ")";
}

/// Image under a variable substitution perm[v]; canonicalized.
inline Monomial apply_permutation(const Monomial &m, const std::vector<VarId> &perm) {
    if (m.is_leaf()) {
        auto v = static_cast<std::size_t>(m.var());
        if (v >= perm.size())
            throw std::out_of_range("apply_permutation: variable outside permutation domain");
        return Monomial::leaf(perm[v]);
    }
    return product(apply_permutation(m.left(), perm), apply_permutation(m.right(), perm));
}

/// The transposition of variables 0 and 1 on a k-variable alphabet.
inline std::vector<VarId> swap_xy(std::size_t nvars = 2) {
    std::vector<VarId> perm(nvars);
    std::iota(perm.begin(), perm.end(), 0);
    if (nvars >= 2)
        std::swap(perm[0], perm[1]);
    return perm;
}

/// Parses a fully parenthesized product: juxtaposition ("(x(xy))") or
/// explicit '*' ("(x*(x*y))"). Multi-character names require '*'.
inline Monomial parse_monomial(std::string_view text, const Alphabet &alphabet = Alphabet()) {
    using K = ParseError::Kind;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };

    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(')
            ++depth;
        else if (text[i] == ')' && --depth < 0)
            throw ParseError(K::UnbalancedParentheses, "unbalanced ')' in '" + std::string(text) + "'", i);
    }
    if (depth != 0)
        throw ParseError(K::UnbalancedParentheses, "unbalanced '(' in '" + std::string(text) + "'", text.size());

    std::function<Monomial()> parse_product;
    auto parse_factor = [&]() -> Monomial {
        skip_ws();
        if (pos >= text.size())
            throw ParseError(K::EmptyProduct, "empty product", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            skip_ws();
            if (pos < text.size() && text[pos] == ')')
                throw ParseError(K::EmptyProduct, "empty product '()'", pos);
            Monomial m = parse_product();
            skip_ws();
            if (pos >= text.size() || text[pos] != ')')
                throw ParseError(K::UnbalancedParentheses, "expected ')'", pos);
            ++pos;
            return m;
        }
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError(K::UnexpectedCharacter, std::string("unexpected '") + c + "'", pos);
        std::size_t start = pos;
        if (alphabet.single_char()) {
            ++pos;
        } else {
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
        }
        std::string name(text.substr(start, pos - start));
        VarId v = alphabet.find(name);
        if (v < 0)
            throw ParseError(K::UnknownVariable, "unknown variable '" + name + "'", start);
        return Monomial::leaf(v);
    };
    parse_product = [&]() -> Monomial {
        std::vector<Monomial> factors;
        for (;;) {
            skip_ws();
            if (pos >= text.size() || text[pos] == ')')
                break;
            if (text[pos] == '*') {
                if (factors.empty())
                    throw ParseError(K::EmptyProduct, "'*' without left factor", pos);
                ++pos;
                skip_ws();
                if (pos >= text.size() || text[pos] == ')')
                    throw ParseError(K::EmptyProduct, "'*' without right factor", pos);
                continue;
            }
            factors.push_back(parse_factor());
        }
        if (factors.empty())
            throw ParseError(K::EmptyProduct, "empty product", pos);
        if (factors.size() > 2)
            throw ParseError(K::AmbiguousProduct, "product of more than two factors needs parentheses", pos);
        return factors.size() == 1 ? factors[0] : product(factors[0], factors[1]);
    };

    skip_ws();
    if (pos >= text.size())
        throw ParseError(K::EmptyProduct, "empty monomial", 0);
    Monomial m = parse_product();
    skip_ws();
    if (pos != text.size())
        throw ParseError(K::UnexpectedCharacter, "trailing input", pos);
    return m;
}

/// One-hole tree s1(s2(...(sk _))). The hole is the greatest leaf, so it
/// always sits on the right of its sibling.
struct Context {
    std::vector<Monomial> siblings;  // from the root down to the hole

    bool is_hole() const noexcept { return siblings.empty(); }
    Multidegree multidegree(std::size_t nvars) const {
        Multidegree d(nvars);
        for (auto &s : siblings)
            s.add_multidegree(d);
        return d;
    }
    Monomial plug(const Monomial &m) const {
        Monomial r = m;
        for (auto it = siblings.rbegin(); it != siblings.rend(); ++it)
            r = product(*it, r);
        return r;
    }
    friend bool operator==(const Context &, const Context &) = default;
};

inline std::string render(const Context &c, const Alphabet &alphabet = Alphabet()) {
    std::string sep = alphabet.single_char() ? "" : "*";
    std::string s = "_";
    for (auto it = c.siblings.rbegin(); it != c.siblings.rend(); ++it)
        s = "(" + render(*it, alphabet) + sep + s + ")";
    return s;
}

} // namespace nilalg
