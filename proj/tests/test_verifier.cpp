#include <nilalg.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace nilalg;

namespace {

void expect_pass(const Report &r) {
    EXPECT_TRUE(r.passed()) << r.to_text();
    EXPECT_FALSE(r.partial()) << r.to_text();
}

bool has_check(const Report &r, std::string_view needle) {
    for (auto &c : r.checks())
        if (c.name.find(needle) != std::string::npos)
            return c.passed;
    ADD_FAILURE() << "no check containing '" << needle << "' in " << r.name();
    return false;
}

} // namespace

TEST(Verifier, Structure) { expect_pass(verify_structure()); }

TEST(Verifier, DetMEqualsTargetWithReportedSign) {
    Report r = verify_det_M();
    expect_pass(r);
    EXPECT_EQ(r.find_value("det_M_degree"), "20");
    ASSERT_TRUE(r.find_value("sign"));
    EXPECT_EQ(r.find_value("det_M"), to_string(det_m_target() * GammaPoly(std::stol(*r.find_value("sign")))));
}

TEST(Verifier, DetMTargetFactorsVanishWhereExpected) {
    const GammaPoly t = det_m_target();
    EXPECT_EQ(t.degree(), 5 + 1 + 10 + 3 + 1);
    // Leading coefficient: -2^33 3^4 * 2^3 * 2.
    EXPECT_EQ(t.leading(), Rational(-pow2(37) * 81));
    for (auto &g : exceptional_gammas())
        EXPECT_EQ(t.eval(g), 0);
}

TEST(Verifier, DetMprime) {
    Report r = verify_det_Mprime();
    expect_pass(r);
    EXPECT_EQ(r.find_value("det_Mprime"), "-1327104");
    EXPECT_EQ(det_mprime_target(), 1327104);
}

TEST(Verifier, WChainRecordsBothPolarizationDiscrepancies) {
    for (Rational gamma : {Rational(2), Rational(-3)}) {
        Report r = verify_W_chain(gamma);
        expect_pass(r);
        EXPECT_EQ(r.discrepancies().size(), 2u);
        EXPECT_TRUE(has_check(r, "= J(x,x,a)"));
        EXPECT_TRUE(has_check(r, "= 2J(x,y,z)"));
    }
}

TEST(Verifier, WChainAtMinusOneSkipsTheDivision) {
    Report r = verify_W_chain(Rational(-1));
    expect_pass(r);
    ASSERT_FALSE(r.notes().empty());
}

TEST(Verifier, ExceptionalHalf) {
    Report r = verify_exceptional_half();
    expect_pass(r);
    EXPECT_EQ(r.discrepancies().size(), 1u);
    EXPECT_TRUE(has_check(r, "L_x L_{x^2}(a)"));
    EXPECT_TRUE(has_check(r, "L_x^5(a)"));
    EXPECT_TRUE(has_check(r, "L_{x^2}L_x^2(a)"));
    EXPECT_TRUE(has_check(r, "L_{x^2x^2}(a)"));
}

TEST(Verifier, ExceptionalMinusHalf) {
    Report r = verify_exceptional_minus_half();
    expect_pass(r);
    EXPECT_TRUE(has_check(r, "L_x^2L_y - L_yL_x^2 reducible"));
    EXPECT_TRUE(has_check(r, "L_xL_yL_x + 2L_yL_x^2 reducible"));
}

TEST(Verifier, GammaMinusOneCounterexample) {
    Report r = verify_gamma_minus_one_counterexample();
    expect_pass(r);
    EXPECT_EQ(r.find_value("x3y3_in_model"), "t^3*s^3");
    EXPECT_EQ(verify_gamma_minus_one_counterexample(4).status(), Status::Unsupported);
}

TEST(Verifier, X3Y3Dichotomy) { expect_pass(verify_x3y3_dichotomy(generic_gammas(), {Rational(-1)})); }

TEST(Verifier, X3Y3CapMarksPartial) {
    SpanLimits tiny;
    tiny.max_component_dim = 10;
    Report r = verify_x3y3_dichotomy({Rational(2)}, {}, tiny);
    EXPECT_TRUE(r.partial());
    EXPECT_FALSE(r.passed());
}

TEST(Verifier, ReductionSmallCase) {
    for (Rational gamma : {Rational(2), Rational(-3), make_rational(1, 2)}) {
        Report r = verify_reduction_theorem_smallcase(gamma, 5);
        expect_pass(r);
        EXPECT_GT(std::stoi(*r.find_value("instances")), 10);
    }
}

TEST(Nilpotency, CubeZeroDimensions) {
    auto k1 = nilpotency_index_cube_zero(1, 6);
    EXPECT_EQ(k1.dims, (std::vector<Integer>{1, 1, 0}));
    EXPECT_EQ(k1.index, 3);
    auto k2 = nilpotency_index_cube_zero(2, 8);
    for (auto &d : k2.dims)
        EXPECT_GE(d, 0);
    ASSERT_TRUE(k2.index);
    EXPECT_EQ(k2.dims.back(), 0);
    EXPECT_EQ(k2.dims.front(), 2);
}

TEST(Nilpotency, ZeroIsAbsorbing) {
    // Past the index every component stays zero.
    for (int d = 3; d <= 6; ++d) {
        SpanOptions opts;
        ConsequenceSpan span(Multidegree{d}, IdentityKind::Cube, Rational(0), opts);
        EXPECT_TRUE(span.full()) << d;
    }
}

TEST(Nilpotency, BoundsAndTheirRelation) {
    EXPECT_EQ(nilpotency_bound(1, 3), pow2(26));
    EXPECT_EQ(nilpotency_bound(1, 3, BoundVariant::MinusHalf), pow2(24));
    for (int k = 1; k <= 3; ++k)
        for (int n = 2; n <= 5; ++n)
            EXPECT_EQ(nilpotency_bound(k, n),
                      nilpotency_bound(k, n, BoundVariant::MinusHalf) * pow2(2 * static_cast<unsigned>(n - 2)));
    EXPECT_THROW(nilpotency_bound(1, 1), std::invalid_argument);
    expect_pass(verify_nilpotency());
}

TEST(Model, IsCommutativeAssociativeAndTruncated) {
    TruncatedPolyModel m(2, 5);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        auto u = m.random(rng), v = m.random(rng), w = m.random(rng);
        EXPECT_EQ(m.multiply(u, v), m.multiply(v, u));
        EXPECT_EQ(m.multiply(m.multiply(u, v), w), m.multiply(u, m.multiply(v, w)));
        EXPECT_EQ(m.multiply(u, m.add(v, w)), m.add(m.multiply(u, v), m.multiply(u, w)));
    }
    EXPECT_TRUE(m.multiply(m.monomial({3, 0}), m.monomial({1, 2})).empty());
    EXPECT_EQ(m.multiply(m.monomial({2, 0}), m.monomial({1, 2})), m.monomial({3, 2}));
}

TEST(Model, EvaluationIsAHomomorphism) {
    TruncatedPolyModel m(2, 8);
    std::mt19937_64 rng(9);
    auto u = m.random(rng), v = m.random(rng);
    Element a = parse_element("x(xy) - 3*(yy)"), b = parse_element("(xy) + 1/2*x");
    EXPECT_EQ(m.evaluate(a * b, {u, v}), m.multiply(m.evaluate(a, {u, v}), m.evaluate(b, {u, v})));
    EXPECT_THROW(m.evaluate(parse_element("[g]*x"), {u, v}), std::invalid_argument);
}

TEST(Model, SatisfiesTheIdentityOnlyAtMinusOne) {
    TruncatedPolyModel m(2, 8);
    std::mt19937_64 rng(2);
    auto u = m.random(rng), v = m.random(rng);
    const Element x = Element::var(0), a = Element::var(1);
    EXPECT_TRUE(m.evaluate(base_identity(x, a).specialize(Rational(-1)), {u, v}).empty());
    EXPECT_FALSE(m.evaluate(base_identity(x, a).specialize(Rational(2)), {m.generator(0), m.generator(1)}).empty());
}

TEST(Report, JsonIsDeterministicWithoutTimings) {
    auto a = verify_det_Mprime().to_json(false).dump(2);
    auto b = verify_det_Mprime().to_json(false).dump(2);
    EXPECT_EQ(a, b);
    auto j = verify_det_Mprime().to_json(false);
    EXPECT_TRUE(j["duration_ms"].is_null());
    EXPECT_EQ(j["status"], "pass");
    EXPECT_TRUE(verify_det_Mprime().to_json(true)["duration_ms"].is_number());
    auto c = verify_gamma_minus_one_counterexample(8, 3).to_json(false).dump();
    EXPECT_EQ(c, verify_gamma_minus_one_counterexample(8, 3).to_json(false).dump());
}

TEST(Report, StatusRules) {
    Report r("t");
    EXPECT_EQ(r.status(), Status::Fail);
    r.check("a", true);
    EXPECT_EQ(r.status(), Status::Pass);
    r.check("b", false, "why");
    EXPECT_EQ(r.status(), Status::Fail);
    ASSERT_NE(r.witness(), nullptr);
    EXPECT_EQ(r.witness()->name, "b");
    r.mark_unsupported("n/a");
    EXPECT_EQ(r.status(), Status::Unsupported);
}
