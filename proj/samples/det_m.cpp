// Prints det(M) for the 27 relations in the symmetric basis of the (3,3)
// component, as a polynomial in g, and its values at a few points.

#include <nilalg.hpp>

#include <iostream>

int main() {
    using namespace nilalg;
    auto B = fixtures::basis_b();
    auto L = fixtures::family_l();
    PolyMatrix M(L.size(), B.size());
    for (std::size_t i = 0; i < L.size(); ++i) {
        auto c = coordinates(L[i], B);
        for (std::size_t j = 0; j < B.size(); ++j)
            M(i, j) = (*c.coords)[j];
    }
    GammaPoly det = det_poly(M);
    std::cout << "det(M) = " << to_string(det) << "\n";
    std::cout << "matches " << det_m_target_text() << ": " << (det == det_m_target() ? "yes" : "no") << "\n";
    for (auto g : {Rational(2), make_rational(1, 2), make_rational(-1, 2)})
        std::cout << "  g = " << to_string(g) << ": " << to_string(det.eval(g)) << "\n";
}
