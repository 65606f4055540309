#pragma once

// Fixed bases and relation families on the (3,3) component of the free
// commutative algebra on x, y. Entries are kept in their published order;
// the order of rows and columns fixes the sign of the determinants.

#include "nilalg/element.hpp"
#include "nilalg/expression.hpp"

#include <array>
#include <string_view>

namespace nilalg::fixtures {

inline constexpr std::array<std::string_view, 27> basis_b_text = {
    "(x(x(x(y(yy)))))+(y(y(y(x(xx)))))",
    "(x(x(y(x(yy)))))+(y(y(x(y(xx)))))",
    "(x(x(y(y(xy)))))+(y(y(x(x(xy)))))",
    "(x(x((xy)(yy))))+(y(y((xx)(xy))))",
    "(x(y(x(x(yy)))))+(y(x(y(y(xx)))))",
    "(x(y(x(y(xy)))))+(y(x(y(x(xy)))))",
    "(x(y(y(x(xy)))))+(y(x(x(y(xy)))))",
    "(x(y(y(y(xx)))))+(y(x(x(x(yy)))))",
    "(x(y((xx)(yy))))+(y(x((xx)(yy))))",
    "(x(y((xy)(xy))))+(y(x((xy)(xy))))",
    "(x((xx)(y(yy))))+(y((yy)(x(xx))))",
    "(x((xy)(x(yy))))+(y((xy)(y(xx))))",
    "(x((xy)(y(xy))))+(y((xy)(x(xy))))",
    "(x((yy)(x(xy))))+(y((xx)(y(xy))))",
    "(x((yy)(y(xx))))+(y((xx)(x(yy))))",
    "((xx)(x(y(yy))))+((yy)(y(x(xx))))",
    "((xx)(y(x(yy))))+((yy)(x(y(xx))))",
    "((xx)(y(y(xy))))+((yy)(x(x(xy))))",
    "((xx)((xy)(yy)))+((yy)((xx)(xy)))",
    "((xy)(x(x(yy))))+((xy)(y(y(xx))))",
    "((xy)(x(y(xy))))+((xy)(y(x(xy))))",
    "((xy)((xx)(yy)))",
    "((xy)((xy)(xy)))",
    "((x(xx))(y(yy)))",
    "((x(xy))(x(yy)))+((y(xx))(y(xy)))",
    "((x(xy))(y(xy)))",
    "((x(yy))(y(xx)))",
};

inline constexpr std::array<std::string_view, 19> basis_bprime_text = {
    "x(x(x(y(yy)))) + y(y(y(x(xx))))",
    "x(x(y(x(yy)))) + y(y(x(y(xx))))",
    "x(x(y(y(xy)))) + y(y(x(x(xy))))",
    "x(x((xy)(yy))) + y(y((xx)(xy)))",
    "x(y(x(x(yy)))) + y(x(y(y(xx))))",
    "x(y(x(y(xy)))) + y(x(y(x(xy))))",
    "x(y(y(x(xy)))) + y(x(x(y(xy))))",
    "x(y(y(y(xx)))) + y(x(x(x(yy))))",
    "x(y((xx)(yy))) + y(x((xx)(yy)))",
    "x(y((xy)(xy))) + y(x((xy)(xy)))",
    "x((xx)(y(yy))) + y((yy)(x(xx)))",
    "x((xy)(x(yy))) + y((xy)(y(xx)))",
    "x((xy)(y(xy))) + y((xy)(x(xy)))",
    "x((yy)(x(xy))) + y((xx)(y(xy)))",
    "x((yy)(y(xx))) + y((xx)(x(yy)))",
    "(x(xy))(x(yy)) + (y(xx))(y(xy))",
    "(x(xy))(y(xy))",
    "(x(yy))(y(xx))",
    "(x(xx))(y(yy))",
};

inline constexpr std::array<std::string_view, 27> family_l_text = {
    "f(y,y,y,(xx)x)+f(x,x,x,(yy)y)",
    "f(x,y,y,(xy)x)+f(y,x,x,(yx)y)",
    "f(yy,x,y,xx)+f(xx,y,x,yy)",
    "f(xx,y,y,xy)+f(yy,x,x,yx)",
    "f(xy,x,y,xy)",
    "f((xx)y,y,y,x)+f((yy)x,x,x,y)",
    "f((xy)x,y,y,x)+f((yx)y,x,x,y)",
    "f((yy)x,x,y,x)+f((xx)y,y,x,y)",
    "f((yy)y,x,x,x)+f((xx)x,y,y,y)",
    "f(xx,yy,y,x)+f(yy,xx,x,y)",
    "f(xy,xy,y,x)+f(yx,yx,x,y)",
    "f(xy,yy,x,x)+f(yx,xx,y,y)",
    "f(y,y,y,xx)x+f(x,x,x,yy)y",
    "f(x,y,y,xy)x+f(y,x,x,yx)y",
    "f(x,x,y,yy)x+f(y,y,x,xx)y",
    "f(xy,y,y,x)x+f(yx,x,x,y)y",
    "f(yy,x,y,x)x+f(xx,y,x,y)y",
    "f(xx,y,y,y)x+f(yy,x,x,x)y",
    "f(xy,x,y,y)x+f(yx,y,x,x)y",
    "f(yy,x,x,y)x+f(xx,y,y,x)y",
    "(f(x,y,y,y)x)x+(f(y,x,x,x)y)y",
    "(f(y,y,y,x)x)x+(f(x,x,x,y)y)y",
    "(f(x,x,y,y)x)y+(f(y,y,x,x)y)x",
    "(f(y,y,x,x)x)y+(f(x,x,y,y)y)x",
    "(xx)f(x,y,y,y)+(yy)f(y,x,x,x)",
    "(xx)f(y,y,y,x)+(yy)f(x,x,x,y)",
    "(xy)f(x,x,y,y)+(yx)f(y,y,x,x)",
};

inline constexpr std::array<std::string_view, 19> family_lprime_text = {
    "f(y,y,y,(xx)x) + f(x,x,x,(yy)y)",
    "f(x,y,y,(xx)y) + f(y,x,x,(yy)x)",
    "f(x,y,y,(xy)x) + f(y,x,x,(yx)y)",
    "f((xx)y,y,y,x) + f((yy)x,x,x,y)",
    "f((xy)x,y,y,x) + f((yx)y,x,x,y)",
    "f((yy)x,x,y,x) + f((xx)y,y,x,y)",
    "f((yx)y,x,y,x) + f((xy)x,y,x,y)",
    "f((yy)y,x,x,x) + f((xx)x,y,y,y)",
    "f(y,y,y,xx)x + f(x,x,x,yy)y",
    "f(x,y,y,xy)x + f(y,x,x,yx)y",
    "f(x,x,y,yy)x + f(y,y,x,xx)y",
    "f(xy,y,y,x)x + f(yx,x,x,y)y",
    "f(yy,x,y,x)x + f(xx,y,x,y)y",
    "f(xy,x,y,y)x + f(yx,y,x,x)y",
    "f(yy,x,x,y)x + f(xx,y,y,x)y",
    "(f(x,y,y,y)x)x + (f(y,x,x,x)y)y",
    "(f(y,y,y,x)x)x + (f(x,x,x,y)y)y",
    "(f(x,x,y,y)x)y + (f(y,y,x,x)y)x",
    "f(xx,y,y,y)x + f(yy,x,x,x)y",
};

/// Builds a SymBasis from "m + phi(m)" or "m" entries; the first written
/// summand is the representative.
template <std::size_t N>
SymBasis make_sym_basis(const std::array<std::string_view, N> &entries) {
    SymBasis b;
    const Alphabet alphabet;
    for (std::size_t i = 0; i < N; ++i) {
        std::string_view text = entries[i];
        // Split on the top-level '+'.
        int depth = 0;
        std::size_t split = std::string_view::npos;
        for (std::size_t k = 0; k < text.size(); ++k) {
            if (text[k] == '(')
                ++depth;
            else if (text[k] == ')')
                --depth;
            else if (text[k] == '+' && depth == 0)
                split = k;
        }
        Monomial rep = parse_monomial(text.substr(0, split), alphabet);
        Element v(rep);
        if (split != std::string_view::npos) {
            Monomial partner = parse_monomial(text.substr(split + 1), alphabet);
            if (partner != apply_permutation(rep, swap_xy()))
                throw std::logic_error("basis entry " + std::to_string(i + 1) + " is not m + phi(m)");
            v += Element(partner);
        } else if (rep != apply_permutation(rep, swap_xy())) {
            throw std::logic_error("basis entry " + std::to_string(i + 1) + " is not swap-fixed");
        }
        b.vectors.push_back(std::move(v));
        b.representatives.push_back(rep);
        b.labels.push_back("#" + std::to_string(i + 1) + " " + std::string(text));
    }
    return b;
}

inline SymBasis basis_b() { return make_sym_basis(basis_b_text); }
inline SymBasis basis_bprime() { return make_sym_basis(basis_bprime_text); }

template <std::size_t N>
std::vector<Element> make_family(const std::array<std::string_view, N> &entries, const GammaPoly &gamma) {
    std::vector<Element> out;
    out.reserve(N);
    const Alphabet alphabet;
    for (auto text : entries)
        out.push_back(parse_element(text, alphabet, gamma));
    return out;
}

/// The 27 relations with symbolic g.
inline std::vector<Element> family_l() { return make_family(family_l_text, GammaPoly::gamma()); }

/// The 19 relations at g = -1/2.
inline std::vector<Element> family_lprime() {
    return make_family(family_lprime_text, GammaPoly(make_rational(-1, 2)));
}

} // namespace nilalg::fixtures
