// Command-line front end: verification suites and ad-hoc queries.
//
//   nilalg verify det-m
//   nilalg verify all --json --out reports.json
//   nilalg consequence "((x(xx))(y(yy)))" --gamma 2
//   nilalg reduce --string "x;x;y;y" --gamma 2
//   nilalg dims --k 2 --n 3
//   nilalg bound --k 1
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or parse error,
// 3 resource cap exceeded.

#include "nilalg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace nilalg;

enum Exit { Ok = 0, Failed = 1, Usage = 2, Cap = 3 };

struct RunConfig {
    std::string gamma_text = "2";
    Rational gamma = 2;
    int k = 1;
    int n = 0;
    std::size_t max_dim = 5000;
    bool json = false;
    bool timings = false;
    std::string out_path;
    std::uint64_t seed = 1;
    int truncation = 8;
    int degree_cap = 6;
    int max_degree = 10;

    SpanLimits limits() const {
        SpanLimits l;
        l.max_component_dim = max_dim;
        return l;
    }
};

class Output {
public:
    explicit Output(const std::string &path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw std::runtime_error("cannot open " + path + " for writing");
        }
    }
    std::ostream &stream() { return file_.is_open() ? static_cast<std::ostream &>(file_) : std::cout; }

private:
    std::ofstream file_;
};

using Suite = std::function<Report(const RunConfig &)>;

const std::map<std::string, Suite> &suites() {
    static const std::map<std::string, Suite> s = {
        {"det-m", [](const RunConfig &) { return verify_det_M(); }},
        {"det-mprime", [](const RunConfig &) { return verify_det_Mprime(); }},
        {"gamma-minus-one",
         [](const RunConfig &c) { return verify_gamma_minus_one_counterexample(c.truncation, c.seed, c.limits()); }},
        {"half", [](const RunConfig &c) { return verify_exceptional_half(c.limits()); }},
        {"minus-half", [](const RunConfig &c) { return verify_exceptional_minus_half(c.limits()); }},
        {"nilpotency", [](const RunConfig &c) { return verify_nilpotency(8, c.limits()); }},
        {"reduction",
         [](const RunConfig &c) { return verify_reduction_theorem_smallcase(c.gamma, c.degree_cap, c.limits()); }},
        {"structure", [](const RunConfig &) { return verify_structure(); }},
        {"w-chain", [](const RunConfig &c) { return verify_W_chain(c.gamma, c.limits()); }},
        {"x3y3",
         [](const RunConfig &c) { return verify_x3y3_dichotomy(generic_gammas(), {Rational(-1)}, c.limits()); }},
    };
    return s;
}

std::string suite_names() {
    std::string out;
    for (auto &[name, _] : suites())
        out += name + ", ";
    return out + "all";
}

int exit_code(const std::vector<Report> &reports) {
    int code = Ok;
    for (auto &r : reports) {
        if (r.partial())
            return Cap;
        if (!r.passed())
            code = Failed;
    }
    return code;
}

int emit(const std::vector<Report> &reports, const RunConfig &cfg, bool as_array, Output &out) {
    if (cfg.json) {
        nlohmann::ordered_json j;
        if (as_array) {
            j = nlohmann::ordered_json::array();
            for (auto &r : reports)
                j.push_back(r.to_json(cfg.timings));
        } else {
            j = reports.front().to_json(cfg.timings);
        }
        out.stream() << j.dump(2) << "\n";
    } else {
        for (auto &r : reports)
            out.stream() << r.to_text(cfg.timings);
    }
    return exit_code(reports);
}

int cmd_verify(const std::string &suite, const RunConfig &cfg) {
    std::vector<Report> reports;
    if (suite == "all") {
        for (auto &[name, run] : suites())  // std::map: ordered by name
            reports.push_back(run(cfg));
    } else {
        auto it = suites().find(suite);
        if (it == suites().end()) {
            std::cerr << "unknown suite '" << suite << "'; expected one of " << suite_names() << "\n";
            return Usage;
        }
        reports.push_back(it->second(cfg));
    }
    Output out(cfg.out_path);
    return emit(reports, cfg, true, out);
}

int cmd_consequence(const std::string &expr, bool cube_identity, const RunConfig &cfg) {
    Report r("consequence");
    const Element e = parse_element(expr);
    const IdentitySpec identity = cube_identity ? IdentitySpec::cube() : IdentitySpec::main();
    r.value("input", expr);
    r.value("identity", identity.name);
    r.value("gamma", to_string(cfg.gamma));
    r.value("element", render(e.specialize(cfg.gamma)));
    auto res = is_consequence(e, identity, cfg.gamma, cfg.limits());
    if (res.multidegree.size()) {
        r.value("component", res.multidegree.str());
        r.value("rank", std::to_string(res.rank) + "/" + std::to_string(res.dimension));
    }
    r.check(res.member ? "is a consequence" : "not a consequence", res.member);
    if (res.member)
        r.certificate("membership", res.certificate);
    r.finish();
    Output out(cfg.out_path);
    int code = emit({r}, cfg, false, out);
    if (!cfg.json && res.member)
        for (auto &t : res.certificate)
            out.stream() << "    " << to_string(t.coefficient) << " * " << t.description << "\n";
    return code;
}

int cmd_reduce(const std::string &text, const RunConfig &cfg) {
    Report r("reduce");
    const StringCombination combo = parse_string_combination(text);
    r.value("input", render(combo));
    r.value("gamma", to_string(cfg.gamma));
    auto res = is_reducible(combo, IdentitySpec::main(), cfg.gamma, cfg.limits());
    r.value("rank", std::to_string(res.rank) + "/" + std::to_string(res.dimension));
    r.check(res.reducible ? "reducible" : "not reducible", res.reducible);
    if (res.reducible) {
        r.certificate("reduction", res);
        StringCombination shorter;
        for (auto &[s, c] : res.shorter)
            shorter.push_back({GammaPoly(c), s});
        r.value("shorter_strings", render(shorter));
    }
    r.finish();
    Output out(cfg.out_path);
    int code = emit({r}, cfg, false, out);
    if (!cfg.json && res.reducible) {
        for (auto &[s, c] : res.shorter)
            out.stream() << "    " << to_string(c) << " * " << render(s) << "\n";
        for (auto &t : res.consequence)
            out.stream() << "    " << to_string(t.coefficient) << " * " << t.description << "\n";
    }
    return code;
}

int cmd_dims(const RunConfig &cfg, int degrees) {
    Output out(cfg.out_path);
    nlohmann::ordered_json j;
    j["k"] = cfg.k;
    int code = Ok;
    if (cfg.n > 0) {
        if (cfg.n < 2) {
            std::cerr << "--n must be at least 2\n";
            return Usage;
        }
        j["n"] = cfg.n;
        j["dim"] = dim_less_than(cfg.n, cfg.k).get_str();
    }
    if (degrees > 0) {
        auto res = nilpotency_index_cube_zero(cfg.k, degrees, cfg.limits());
        std::vector<std::string> dims;
        for (auto &d : res.dims)
            dims.push_back(d.get_str());
        j["cube_zero_dims"] = dims;
        j["cube_zero_index"] = res.index ? nlohmann::ordered_json(*res.index) : nlohmann::ordered_json(nullptr);
        if (res.cap_exceeded) {
            j["cap"] = res.cap_note;
            code = Cap;
        }
    }
    if (cfg.json) {
        out.stream() << j.dump(2) << "\n";
    } else {
        if (j.contains("dim"))
            out.stream() << j["dim"].get<std::string>() << "\n";
        if (j.contains("cube_zero_dims")) {
            out.stream() << "dims by degree:";
            for (auto &d : j["cube_zero_dims"])
                out.stream() << " " << d.get<std::string>();
            out.stream() << "\nindex: "
                         << (j["cube_zero_index"].is_null() ? "not reached" : j["cube_zero_index"].dump()) << "\n";
            if (j.contains("cap"))
                out.stream() << "cap: " << j["cap"].get<std::string>() << "\n";
        }
    }
    return code;
}

int cmd_bound(const RunConfig &cfg, const std::string &variant) {
    BoundVariant v = variant == "minus-half" ? BoundVariant::MinusHalf : BoundVariant::General;
    int n = cfg.n;
    nlohmann::ordered_json j;
    j["k"] = cfg.k;
    if (n == 0) {
        auto res = nilpotency_index_cube_zero(cfg.k, cfg.max_degree, cfg.limits());
        if (!res.index) {
            std::cerr << "nilpotency index not reached up to degree " << cfg.max_degree
                      << (res.cap_exceeded ? " (" + res.cap_note + ")" : "") << "; pass --n\n";
            return res.cap_exceeded ? Cap : Failed;
        }
        n = *res.index;
        j["n_source"] = "computed";
    } else {
        j["n_source"] = "given";
    }
    if (n < 2) {
        std::cerr << "--n must be at least 2\n";
        return Usage;
    }
    Integer dim = dim_less_than(n, cfg.k);
    Integer bound = nilpotency_bound(cfg.k, n, v);
    j["n"] = n;
    j["dim"] = dim.get_str();
    j["variant"] = variant;
    Integer exponent = 4 * Integer(n) * dim + (v == BoundVariant::General ? 2 * (n - 2) : 0);
    j["exponent"] = exponent.get_str();
    j["bound"] = bound.get_str();
    Output out(cfg.out_path);
    if (cfg.json)
        out.stream() << j.dump(2) << "\n";
    else
        out.stream() << "n = " << n << ", dim[n,k] = " << dim.get_str() << ", bound = 2^" << exponent.get_str()
                     << " = " << bound.get_str() << "\n";
    return Ok;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact verification engine for commutative algebras satisfying L_x^3 + g L_{x^3} = 0"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--gamma", cfg.gamma_text, "parameter g as p/q")->capture_default_str();
    app.add_option("--k", cfg.k, "number of generators")->check(CLI::Range(1, 8))->capture_default_str();
    app.add_option("--n", cfg.n, "degree n for dim[n,k] and the bound")->check(CLI::Range(0, 64));
    app.add_option("--max-dim", cfg.max_dim, "largest component dimension")->check(CLI::PositiveNumber);
    app.add_flag("--json", cfg.json, "structured output");
    app.add_option("--out", cfg.out_path, "write output to a file");
    app.add_option("--seed", cfg.seed, "seed for pseudo-random samples")->capture_default_str();
    app.add_flag("--timings", cfg.timings, "include wall-clock durations (output no longer reproducible)");

    std::string suite;
    auto *verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name")->required();
    verify->add_option("--truncation", cfg.truncation, "truncation degree of the polynomial model")
        ->check(CLI::Range(6, 32));
    verify->add_option("--degree-cap", cfg.degree_cap, "largest total degree of reduction strings")
        ->check(CLI::Range(3, 8));

    std::string expr;
    bool cube_identity = false;
    auto *consequence = app.add_subcommand("consequence", "decide membership in the T-ideal");
    consequence->add_option("expr", expr, "linear combination of monomials")->required();
    consequence->add_flag("--cube", cube_identity, "use the identity x^3 = 0 instead");

    std::string string_text;
    auto *reduce = app.add_subcommand("reduce", "decide reducibility of an operator string combination");
    reduce->add_option("--string", string_text, "factors separated by ';', e.g. \"x;x;y;y\"")->required();

    int degrees = 0;
    auto *dims = app.add_subcommand("dims", "dim[n,k] and relatively free dimensions for x^3 = 0");
    dims->add_option("--degrees", degrees, "dimensions by degree up to this degree")->check(CLI::Range(1, 16));

    std::string variant = "general";
    auto *bound = app.add_subcommand("bound", "nilpotency index bound");
    bound->add_option("--variant", variant, "general or minus-half")
        ->check(CLI::IsMember({"general", "minus-half"}))
        ->capture_default_str();
    bound->add_option("--max-degree", cfg.max_degree, "degree limit when computing n")->check(CLI::Range(2, 16));

    for (auto *sub : {verify, consequence, reduce, dims, bound})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    try {
        cfg.gamma = parse_rational(cfg.gamma_text);
        if (*verify)
            return cmd_verify(suite, cfg);
        if (*consequence)
            return cmd_consequence(expr, cube_identity, cfg);
        if (*reduce)
            return cmd_reduce(string_text, cfg);
        if (*dims) {
            if (cfg.n == 0 && degrees == 0) {
                std::cerr << "dims: pass --n and/or --degrees\n";
                return Usage;
            }
            return cmd_dims(cfg, degrees);
        }
        return cmd_bound(cfg, variant);
    } catch (const ParseError &e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
        return Usage;
    } catch (const CapExceeded &e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return Cap;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    }
}
