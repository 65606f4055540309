// Reduces L_x L_x L_x L_x (a) at g = 2: modulo consequences of the identity
// it is a combination of shorter operator strings.

#include <nilalg.hpp>

#include <iostream>

int main() {
    using namespace nilalg;
    const Alphabet alphabet({"x", "a"});
    auto combo = parse_string_combination("x;x;x;x", alphabet);
    auto res = is_reducible(combo, IdentitySpec::main(), Rational(2), {}, alphabet);
    std::cout << render(combo, alphabet) << ": " << (res.reducible ? "reducible" : "not reducible") << "\n";
    for (auto &[s, c] : res.shorter)
        std::cout << "  " << to_string(c) << " * " << render(s, alphabet) << "\n";
    std::cout << "  + " << res.consequence.size() << " consequence rows\n";
}
