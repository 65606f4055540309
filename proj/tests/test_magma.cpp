#include <nilalg.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace nilalg;

namespace {

// Oracle: unordered binary trees as strings, built by brute force. A tree
// is a leaf letter or "(" + l + r + ")" with l <= r as strings, which picks
// one representative per commutative class.
std::set<std::string> brute_force_trees(const std::vector<int> &d) {
    static const std::string letters = "xyz";
    int total = 0;
    for (int e : d)
        total += e;
    if (total == 1) {
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] == 1)
                return {std::string(1, letters[i])};
    }
    std::set<std::string> out;
    // Split d into two nonzero parts.
    std::vector<int> left(d.size(), 0);
    for (;;) {
        std::size_t i = 0;
        while (i < d.size() && left[i] == d[i])
            left[i++] = 0;
        if (i == d.size())
            break;
        ++left[i];
        std::vector<int> right(d.size());
        int lt = 0;
        for (std::size_t k = 0; k < d.size(); ++k) {
            right[k] = d[k] - left[k];
            lt += left[k];
        }
        if (lt == total)
            continue;
        for (auto &l : brute_force_trees(left))
            for (auto &r : brute_force_trees(right))
                out.insert("(" + std::min(l, r) + std::max(l, r) + ")");
    }
    return out;
}

} // namespace

TEST(Monomial, CommutativeCanonicalForm) {
    EXPECT_EQ(parse_monomial("(xy)"), parse_monomial("(yx)"));
    EXPECT_EQ(parse_monomial("(x(yz))"), parse_monomial("((zy)x)"));
    EXPECT_NE(parse_monomial("(x(xy))"), parse_monomial("(y(xx))"));
    EXPECT_NE(parse_monomial("((xx)(xx))"), parse_monomial("(x(x(xx)))"));
}

TEST(Monomial, RenderParsesBack) {
    for (auto &m : enumerate(Multidegree{3, 2}))
        EXPECT_EQ(parse_monomial(render(m)), m) << render(m);
    const Alphabet long_names({"u1", "u2"});
    Monomial m = product(Monomial::leaf(0), product(Monomial::leaf(1), Monomial::leaf(1)));
    EXPECT_EQ(parse_monomial(render(m, long_names), long_names), m);
}

TEST(Monomial, DegreesAndVariables) {
    Monomial m = parse_monomial("((xx)(y(xz)))");
    EXPECT_EQ(m.degree(), 5);
    EXPECT_EQ(m.multidegree(3), (Multidegree{3, 1, 1}));
    EXPECT_TRUE(m.contains_var(2));
    EXPECT_FALSE(m.contains_var(3));
}

TEST(Monomial, ParseErrors) {
    using K = ParseError::Kind;
    auto kind_of = [](std::string_view s) {
        try {
            parse_monomial(s);
        } catch (const ParseError &e) {
            return e.kind();
        }
        ADD_FAILURE() << "no error for '" << s << "'";
        return K::BadArity;
    };
    EXPECT_EQ(kind_of("(xy"), K::UnbalancedParentheses);
    EXPECT_EQ(kind_of("xy)"), K::UnbalancedParentheses);
    EXPECT_EQ(kind_of("(xf)"), K::UnknownVariable);
    EXPECT_EQ(kind_of("()"), K::EmptyProduct);
    EXPECT_EQ(kind_of("(xyz)"), K::AmbiguousProduct);
}

TEST(Enumeration, MatchesBruteForceTrees) {
    for (int total = 1; total <= 6; ++total)
        for (std::size_t nv = 1; nv <= 3; ++nv)
            for (auto &d : multidegrees_of_total(nv, total)) {
                auto oracle = brute_force_trees(d.exponents());
                auto monos = enumerate(d);
                std::set<Monomial> distinct(monos.begin(), monos.end());
                EXPECT_EQ(distinct.size(), monos.size()) << d.str();
                EXPECT_EQ(monos.size(), oracle.size()) << d.str();
                EXPECT_EQ(count(d), Integer(static_cast<unsigned long>(oracle.size()))) << d.str();
                for (auto &m : monos)
                    EXPECT_EQ(m.multidegree(nv), d);
            }
}

TEST(Enumeration, CountsAgreeWithRecurrenceUpToDegreeSeven) {
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 7; ++n) {
            Integer by_component(0);
            for (auto &d : multidegrees_of_total(static_cast<std::size_t>(k), n)) {
                by_component += count(d);
                if (n <= 5) {
                    EXPECT_EQ(count(d), Integer(static_cast<unsigned long>(enumerate(d).size())));
                }
            }
            EXPECT_EQ(by_component, count_by_degree(n, k)) << "n=" << n << " k=" << k;
        }
}

TEST(Enumeration, SingleVariableCountsAreWedderburnEtherington) {
    const std::vector<long> we{1, 1, 1, 2, 3, 6, 11, 23, 46, 98};
    for (std::size_t n = 1; n <= we.size(); ++n)
        EXPECT_EQ(count_by_degree(static_cast<int>(n), 1), Integer(we[n - 1])) << n;
}

TEST(Enumeration, DimLessThan) {
    EXPECT_EQ(dim_less_than(3, 1), 2);
    EXPECT_EQ(dim_less_than(3, 2), 5);
    EXPECT_EQ(dim_less_than(4, 1), 3);
    EXPECT_EQ(dim_less_than(4, 2), 2 + 3 + 6);
    EXPECT_THROW(dim_less_than(1, 1), std::invalid_argument);
}

TEST(Enumeration, ThreeThreeComponent) {
    auto monos = enumerate(Multidegree{3, 3});
    EXPECT_EQ(monos.size(), 49u);
    std::size_t fixed = 0;
    for (auto &m : monos)
        fixed += apply_permutation(m, swap_xy()) == m;
    EXPECT_EQ(fixed, 5u);
}

TEST(Contexts, PlugReachesExactlyTheMonomialsWithThatSubtree) {
    const Multidegree outer{2, 1}, hole{1, 1};
    std::set<Monomial> plugged;
    for (auto &c : enumerate_contexts(outer))
        for (auto &m : enumerate(hole)) {
            Monomial p = c.plug(m);
            EXPECT_EQ(p.multidegree(2), (Multidegree{3, 2}));
            plugged.insert(p);
        }
    // Oracle: monomials of (3,2) having some subtree of multidegree (1,1).
    std::function<bool(const Monomial &)> has = [&](const Monomial &m) {
        if (m.multidegree(2) == hole)
            return true;
        return !m.is_leaf() && (has(m.left()) || has(m.right()));
    };
    std::set<Monomial> expected;
    for (auto &m : enumerate(Multidegree{3, 2}))
        if (has(m))
            expected.insert(m);
    EXPECT_EQ(plugged, expected);
    EXPECT_TRUE(enumerate_contexts(Multidegree{0, 0}).front().is_hole());
}
