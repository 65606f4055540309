#include <nilalg.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace nilalg;

namespace {

// Oracle: Laplace expansion along the first row; works over any ring.
template <typename T>
T cofactor_det(const DenseMatrix<T> &m) {
    const std::size_t n = m.rows();
    if (n == 0)
        return T(1);
    if (n == 1)
        return m(0, 0);
    T acc{};
    for (std::size_t j = 0; j < n; ++j) {
        DenseMatrix<T> minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j)
                    minor(r - 1, cc++) = m(r, c);
        T term = m(0, j) * cofactor_det(minor);
        if (j % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

Rational random_rational(std::mt19937_64 &rng, int bound = 9) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    return make_rational(num(rng), den(rng));
}

PolyMatrix random_poly_matrix(std::mt19937_64 &rng, std::size_t n, int degree) {
    PolyMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<Rational> coeffs;
            for (int k = 0; k <= degree; ++k)
                coeffs.push_back(random_rational(rng, 4));
            m(r, c) = GammaPoly(coeffs);
        }
    return m;
}

} // namespace

TEST(Rational, ParsesIntegersAndFractions) {
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("-1/2"), make_rational(-1, 2));
    EXPECT_EQ(parse_rational(" 6/4 "), make_rational(3, 2));
    EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
}

TEST(Rational, RejectsMalformedInput) {
    for (const char *bad : {"", "1/0", "abc", "1/", "/2", "1.5", "2/3/4"})
        EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Rational, Powers) {
    EXPECT_EQ(pow2(33), Integer("8589934592"));
    EXPECT_EQ(ipow(Integer(3), 4), Integer(81));
    EXPECT_EQ(rpow(make_rational(-1, 2), 3), make_rational(-1, 8));
}

TEST(GammaPoly, RingOperations) {
    const GammaPoly g = GammaPoly::gamma();
    GammaPoly p = (g + GammaPoly(1)) * (g - GammaPoly(1));
    EXPECT_EQ(p, g * g - GammaPoly(1));
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ((p - p).degree(), -1);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((GammaPoly{1, 2}.pow(3)), (GammaPoly{1, 6, 12, 8}));
}

TEST(GammaPoly, Division) {
    const GammaPoly num = GammaPoly{-1, 0, 4} * GammaPoly{3, 1};
    EXPECT_EQ((exact_div(num, GammaPoly{-1, 2})), (GammaPoly{1, 2} * GammaPoly{3, 1}));
    auto [q, r] = divmod(GammaPoly{1, 0, 1}, GammaPoly{1, 1});
    EXPECT_EQ((q * GammaPoly{1, 1} + r), (GammaPoly{1, 0, 1}));
    EXPECT_LT(r.degree(), 1);
}

TEST(GammaPoly, EvaluatesByHorner) {
    const GammaPoly p{3, -2, 0, 5};
    for (int x = -3; x <= 3; ++x) {
        Rational direct = Rational(3) - Rational(2 * x) + Rational(5 * x * x * x);
        EXPECT_EQ(p.eval(Rational(x)), direct);
    }
    EXPECT_EQ(p.eval(make_rational(1, 2)), Rational(3) - Rational(1) + make_rational(5, 8));
}

TEST(GammaPoly, ParseAndRender) {
    EXPECT_EQ(parse_gamma_poly("4g^2 - 1"), (GammaPoly{-1, 0, 4}));
    EXPECT_EQ(parse_gamma_poly("4*g^2-1"), (GammaPoly{-1, 0, 4}));
    EXPECT_EQ(parse_gamma_poly("1 + 2g"), (GammaPoly{1, 2}));
    EXPECT_EQ(parse_gamma_poly("-1/2 g"), GammaPoly::monomial(make_rational(-1, 2), 1));
    for (const GammaPoly &p : {GammaPoly{-1, 0, 4}, GammaPoly{0, 1}, GammaPoly(make_rational(3, 7)), GammaPoly{}})
        EXPECT_EQ(parse_gamma_poly(to_string(p)), p) << to_string(p);
    EXPECT_THROW(parse_gamma_poly("g^"), ParseError);
    EXPECT_THROW(parse_gamma_poly("2x"), ParseError);
}

TEST(GammaPoly, InterpolationRecoversKnownPolynomial) {
    const GammaPoly p = GammaPoly{2, -1, 0, 3}.pow(2);
    std::vector<std::pair<Rational, Rational>> pts;
    for (int i = 0; i <= p.degree(); ++i)
        pts.emplace_back(Rational(i - 3), p.eval(Rational(i - 3)));
    EXPECT_EQ(interpolate(pts), p);
}

TEST(Matrix, DeterminantMatchesCofactorExpansion) {
    std::mt19937_64 rng(7);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            RationalMatrix m(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    m(r, c) = random_rational(rng);
            EXPECT_EQ(determinant(m), cofactor_det(m)) << n;
        }
}

TEST(Matrix, SingularMatrixHasZeroDeterminantAndLowerRank) {
    RationalMatrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            m(r, c) = Rational(static_cast<long>(r * 3 + c + 1));
    EXPECT_EQ(determinant(m), 0);
    EXPECT_EQ(rank(m), 2u);
    EXPECT_EQ(rank(RationalMatrix::identity(4)), 4u);
}

TEST(Matrix, SolveFindsExactSolutionOrReportsNone) {
    RationalMatrix m(3, 2);
    m(0, 0) = 1, m(0, 1) = 2;
    m(1, 0) = 3, m(1, 1) = 4;
    m(2, 0) = 5, m(2, 1) = 6;
    auto x = solve(m, {Rational(5), Rational(11), Rational(17)});
    ASSERT_TRUE(x);
    EXPECT_EQ(multiply(m, *x), (std::vector<Rational>{5, 11, 17}));
    EXPECT_FALSE(solve(m, {Rational(1), Rational(0), Rational(0)}));
}

TEST(Matrix, PolynomialDeterminantMatchesCofactorOracle) {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 5; ++n) {
        PolyMatrix m = random_poly_matrix(rng, n, 2);
        GammaPoly oracle = cofactor_det(m);
        EXPECT_EQ(det_poly(m), oracle) << n;
        EXPECT_EQ(det_poly_direct(m), oracle) << n;
    }
}

TEST(Matrix, InterpolatedDeterminantAgreesWithSpecializations) {
    std::mt19937_64 rng(3);
    PolyMatrix m = random_poly_matrix(rng, 7, 1);
    const GammaPoly det = det_poly(m);
    for (int i = 0; i < 10; ++i) {
        Rational g = random_rational(rng, 50);
        EXPECT_EQ(det.eval(g), determinant(specialize(m, g))) << to_string(g);
    }
}

TEST(RowSpace, RankAndCertificates) {
    RowSpace s(3);
    EXPECT_TRUE(s.insert({{0, Rational(1)}, {1, Rational(2)}}, 10));
    EXPECT_TRUE(s.insert({{1, Rational(1)}, {2, Rational(1)}}, 11));
    EXPECT_FALSE(s.insert({{0, Rational(1)}, {1, Rational(3)}, {2, Rational(1)}}, 12));
    EXPECT_EQ(s.rank(), 2u);
    SparseVector v{{0, Rational(2)}, {1, Rational(1)}, {2, Rational(-3)}};
    auto e = s.express(v);
    ASSERT_TRUE(e);
    SparseVector sum;
    for (auto &[tag, c] : *e) {
        SparseVector row = tag == 10 ? SparseVector{{0, Rational(1)}, {1, Rational(2)}}
                                     : SparseVector{{1, Rational(1)}, {2, Rational(1)}};
        for (auto &[col, x] : row)
            sum[col] += c * x;
    }
    EXPECT_EQ(sum, v);
    EXPECT_FALSE(s.contains({{2, Rational(1)}}));
}
