// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <nilalg.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

using namespace nilalg;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok;
    std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string failures(const Report &r) {
    std::string out;
    for (auto &c : r.checks())
        if (!c.passed)
            out += (out.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
    return out.empty() ? r.name() + " ok" : out;
}

bool has_passing_check(const Report &r, std::string_view prefix) {
    for (auto &c : r.checks())
        if (c.name.rfind(prefix, 0) == 0 && c.passed)
            return true;
    return false;
}

PolyMatrix matrix_m() {
    auto B = fixtures::basis_b();
    auto L = fixtures::family_l();
    PolyMatrix M(L.size(), B.size());
    for (std::size_t i = 0; i < L.size(); ++i) {
        auto c = coordinates(L[i], B);
        if (!c.in_span())
            throw std::runtime_error("L element outside span(B)");
        for (std::size_t j = 0; j < B.size(); ++j)
            M(i, j) = (*c.coords)[j];
    }
    return M;
}

Outcome det_m() {
    auto t = Clock::now();
    Report r = verify_det_M();
    double s = seconds_since(t);
    return {r.passed() && s < 60, failures(r) + ", sign " + r.find_value("sign").value_or("?") + ", " +
                                      std::to_string(s) + " s"};
}

Outcome det_mprime() {
    auto t = Clock::now();
    Report r = verify_det_Mprime();
    double s = seconds_since(t);
    return {r.passed() && s < 30, "det(M') = " + r.find_value("det_Mprime").value_or("?") + ", " + failures(r)};
}

Outcome structure() {
    Report r = verify_structure();
    return {r.passed(), failures(r)};
}

Outcome dichotomy() {
    Report a = verify_x3y3_dichotomy(generic_gammas(), {Rational(-1)});
    Report b = verify_gamma_minus_one_counterexample(8, 1);
    bool certs = a.certificates().size() == generic_gammas().size();
    return {a.passed() && b.passed() && certs, failures(a) + "; " + failures(b)};
}

Outcome exceptional() {
    auto t0 = Clock::now();
    Report h = verify_exceptional_half();
    double sh = seconds_since(t0);
    auto t1 = Clock::now();
    Report m = verify_exceptional_minus_half();
    double sm = seconds_since(t1);
    bool named = has_passing_check(h, "L_x L_{x^2}(a)") && has_passing_check(h, "L_x^5(a)") &&
                 has_passing_check(h, "L_{x^2}L_x^2(a)") && has_passing_check(h, "L_{x^2x^2}(a)") &&
                 has_passing_check(m, "x^3x is") && has_passing_check(m, "x^3x^2 is") &&
                 has_passing_check(m, "L_x^5(a)") && has_passing_check(m, "L_x^2L_y - L_yL_x^2 reducible") &&
                 has_passing_check(m, "L_xL_yL_x + 2L_yL_x^2 reducible");
    return {h.passed() && m.passed() && named && sh < 30 && sm < 30, failures(h) + "; " + failures(m)};
}

Outcome reduction() {
    bool ok = true;
    std::string detail;
    for (Rational gamma : {Rational(2), Rational(-3), make_rational(1, 3)}) {
        Report r = verify_reduction_theorem_smallcase(gamma);
        bool all = r.passed() && has_passing_check(r, "Lemma 1:") && has_passing_check(r, "Lemma 2:") &&
                   has_passing_check(r, "Lemma 3:") && has_passing_check(r, "Lemma 4:") &&
                   has_passing_check(r, "(4g^2-1)");
        ok = ok && all;
        detail += std::string(detail.empty() ? "" : "; ") + "g = " + to_string(gamma) + ": " +
                  r.find_value("instances").value_or("?") + " instances " + (all ? "ok" : failures(r));
    }
    return {ok, detail};
}

Outcome counting() {
    bool ok = dim_less_than(3, 1) == 2 && dim_less_than(3, 2) == 5 && dim_less_than(4, 1) == 3;
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 7; ++n) {
            Integer sum(0);
            for (auto &d : multidegrees_of_total(static_cast<std::size_t>(k), n)) {
                Integer c = count(d);
                if (Integer(static_cast<unsigned long>(enumerate(d).size())) != c)
                    ok = false;
                sum += c;
            }
            ok = ok && sum == count_by_degree(n, k);
        }
    auto res = nilpotency_index_cube_zero(1, 8);
    ok = ok && res.dims == std::vector<Integer>{1, 1, 0} && res.index == 3;
    ok = ok && res.index && nilpotency_bound(1, *res.index) == pow2(26);
    return {ok, "k=1 dims " + join(res.dims) + ", bound " +
                    (res.index ? nilpotency_bound(1, *res.index).get_str() : std::string("?"))};
}

Outcome self_consistency() {
    bool ok = true;
    PolyMatrix M = matrix_m();
    GammaPoly det = det_poly(M);
    std::mt19937_64 rng(20);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 40);
    for (int i = 0; i < 10; ++i) {
        Rational g = make_rational(num(rng), den(rng));
        ok = ok && det.eval(g) == determinant(specialize(M, g));
    }
    std::size_t components = 0;
    for (Rational gamma : generic_gammas())
        for (int total = 1; total <= 6; ++total)
            for (auto &d : multidegrees_of_total(2, total)) {
                SpanOptions plain, extended;
                plain.stop_when_full = extended.stop_when_full = false;
                plain.forms = {GeneratorForm::F};
                extended.forms = {GeneratorForm::F, GeneratorForm::Base, GeneratorForm::FirstLinearization};
                ok = ok && ConsequenceSpan(d, IdentityKind::Main, gamma, plain).rank() ==
                               ConsequenceSpan(d, IdentityKind::Main, gamma, extended).rank();
                ++components;
            }
    return {ok, "10 specializations of det(M); " + std::to_string(components) + " span comparisons"};
}

Outcome discrepancies() {
    Report r = verify_W_chain(Rational(2));
    bool found_a = false, found_2 = false;
    for (auto &d : r.discrepancies()) {
        found_a = found_a || d.find("J(x,a,a)") != std::string::npos;
        found_2 = found_2 || d.find("2J(x,y,z)") != std::string::npos;
    }
    return {r.passed() && found_a && found_2,
            std::to_string(r.discrepancies().size()) + " discrepancies, " + failures(r)};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"det(M) reproduction", det_m},
        {"det(M') reproduction", det_mprime},
        {"structural counts", structure},
        {"consequence dichotomy", dichotomy},
        {"exceptional chains", exceptional},
        {"reduction calculus", reduction},
        {"counting and bounds", counting},
        {"engine self-consistency", self_consistency},
        {"recorded discrepancies", discrepancies},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail
                  << std::endl;
    }
    return failed ? 1 : 0;
}
