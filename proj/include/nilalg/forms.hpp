#pragma once

// The identity L_x^3 + g L_{x^3} = 0 and its linearizations, written as
// elements of the free algebra. `gamma` is a polynomial so that the same
// code serves the symbolic and the specialized cases.

#include "nilalg/element.hpp"

namespace nilalg {

/// x(x(xa)) + g (x(xx))a
inline Element base_identity(const Element &x, const Element &a, const GammaPoly &gamma = GammaPoly::gamma()) {
    return x * (x * (x * a)) + gamma * (cube(x) * a);
}

/// J(x,y,z) = (xy)z + (yz)x + (zx)y
inline Element J(const Element &x, const Element &y, const Element &z) {
    return (x * y) * z + (y * z) * x + (z * x) * y;
}

/// y(x(xa)) + x(y(xa)) + x(x(ya)) + 2g((xy)x)a + g((xx)y)a
inline Element first_linearization(const Element &x, const Element &y, const Element &a,
                                   const GammaPoly &gamma = GammaPoly::gamma()) {
    Element quartic = y * (x * (x * a)) + x * (y * (x * a)) + x * (x * (y * a));
    Element cubic = 2 * (((x * y) * x) * a) + ((x * x) * y) * a;
    return quartic + gamma * cubic;
}

/// Full linearization: the six terms u(v(wa)) over orderings of (x,y,z)
/// plus 2g[((xy)z)a + ((yz)x)a + ((zx)y)a].
inline Element f(const Element &x, const Element &y, const Element &z, const Element &a,
                 const GammaPoly &gamma = GammaPoly::gamma()) {
    Element quartic = z * (y * (x * a)) + y * (z * (x * a)) + z * (x * (y * a)) + x * (z * (y * a)) +
                      y * (x * (z * a)) + x * (y * (z * a));
    Element cubic = ((x * y) * z) * a + ((y * z) * x) * a + ((z * x) * y) * a;
    return quartic + scale(GammaPoly(2) * gamma, cubic);
}

/// Full linearization of x(x(xx)), twelve terms.
inline Element g(const Element &x, const Element &y, const Element &z, const Element &a) {
    return a * (x * (y * z)) + a * (y * (x * z)) + a * (z * (x * y)) + x * (a * (y * z)) + x * (y * (a * z)) +
           x * (z * (a * y)) + y * (a * (x * z)) + y * (x * (a * z)) + y * (z * (a * x)) + z * (a * (x * y)) +
           z * (x * (y * a)) + z * (y * (a * x));
}

} // namespace nilalg
