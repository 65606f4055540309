// Asks whether x^3 y^3 := (x(xx))(y(yy)) follows from the identity at a few
// values of g, printing the certificate size or the rank deficit.

#include <nilalg.hpp>

#include <iostream>

int main() {
    using namespace nilalg;
    const Element e = parse_element("(x(xx))(y(yy))");
    for (auto g : {Rational(2), make_rational(1, 3), Rational(-1)}) {
        auto res = is_consequence(e, IdentitySpec::main(), g);
        std::cout << "g = " << to_string(g) << ": ";
        if (res.member)
            std::cout << "consequence, " << res.certificate.size() << " generator terms";
        else
            std::cout << "not a consequence, span rank " << res.rank << "/" << res.dimension;
        std::cout << "\n";
    }
}
