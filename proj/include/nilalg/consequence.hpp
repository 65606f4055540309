#pragma once

// T-ideal consequence spans inside one multigraded component, exact
// membership with certificates, and reducibility of operator strings.
//
// In characteristic 0 the T-ideal of a homogeneous identity is spanned by
// C[lin(m1,...,mr)] where lin is its full linearization, the m_i range over
// monomials and C over one-hole contexts. Components are finite, so the
// consequences of a given multidegree form a finite-dimensional row space.

#include "nilalg/element.hpp"
#include "nilalg/enumerate.hpp"
#include "nilalg/forms.hpp"
#include "nilalg/matrix.hpp"
#include "nilalg/row_space.hpp"

#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace nilalg {

enum class IdentityKind {
    Main,  // L_x^3 + g L_{x^3} = 0, i.e. x(x(xa)) + g (x(xx))a = 0
    Cube,  // x(xx) = 0
};

struct IdentitySpec {
    std::string name;
    IdentityKind kind = IdentityKind::Main;
    std::optional<Rational> gamma;  // nullopt: symbolic

    static IdentitySpec main(std::optional<Rational> gamma = std::nullopt) {
        return {"L_x^3 + g L_{x^3}", IdentityKind::Main, std::move(gamma)};
    }
    static IdentitySpec cube() { return {"x^3", IdentityKind::Cube, std::nullopt}; }
};

enum class GeneratorForm {
    F,                   // f(x,y,z,a), symmetric in x,y,z
    J,                   // J(x,y,z), fully symmetric
    Base,                // p(x,a)
    FirstLinearization,  // first linearization in (x,y,a)
};

inline std::size_t arity(GeneratorForm form) {
    switch (form) {
    case GeneratorForm::F:
        return 4;
    case GeneratorForm::Base:
        return 2;
    default:
        return 3;
    }
}

/// How often each argument occurs in every term: f and J are multilinear,
/// p(x,a) is cubic in x, the first linearization is quadratic in x.
inline std::vector<int> multiplicities(GeneratorForm form) {
    switch (form) {
    case GeneratorForm::Base:
        return {3, 1};
    case GeneratorForm::FirstLinearization:
        return {2, 1, 1};
    default:
        return std::vector<int>(arity(form), 1);
    }
}

/// Leading arguments over which the form is symmetric.
inline std::size_t symmetric_prefix(GeneratorForm form) {
    switch (form) {
    case GeneratorForm::F:
    case GeneratorForm::J:
        return 3;
    default:
        return 1;
    }
}

inline const char *form_name(GeneratorForm form) {
    switch (form) {
    case GeneratorForm::F:
        return "f";
    case GeneratorForm::J:
        return "J";
    case GeneratorForm::Base:
        return "p";
    default:
        return "lin1";
    }
}

inline Element expand_form(GeneratorForm form, const std::vector<Monomial> &args, const GammaPoly &gamma) {
    auto e = [&](std::size_t i) { return Element(args.at(i)); };
    switch (form) {
    case GeneratorForm::F:
        return f(e(0), e(1), e(2), e(3), gamma);
    case GeneratorForm::J:
        return J(e(0), e(1), e(2));
    case GeneratorForm::Base:
        return base_identity(e(0), e(1), gamma);
    default:
        return first_linearization(e(0), e(1), e(2), gamma);
    }
}

inline std::vector<GeneratorForm> default_forms(IdentityKind kind) {
    return kind == IdentityKind::Main ? std::vector<GeneratorForm>{GeneratorForm::F}
                                      : std::vector<GeneratorForm>{GeneratorForm::J};
}

inline Element plug(const Context &c, const Element &e) {
    if (c.is_hole())
        return e;
    Element r;
    for (auto &[m, coef] : e)
        r.add_term(c.plug(m), coef);
    return r;
}

struct Generator {
    GeneratorForm form;
    Context context;
    std::vector<Monomial> args;

    Element expand(const Rational &gamma) const { return plug(context, expand_form(form, args, GammaPoly(gamma))); }

    std::string describe(const Alphabet &alphabet = Alphabet()) const {
        std::string inner = std::string(form_name(form)) + "(";
        for (std::size_t i = 0; i < args.size(); ++i)
            inner += (i ? "," : "") + render(args[i], alphabet);
        inner += ")";
        if (context.is_hole())
            return inner;
        return render(context, alphabet) + "[" + inner + "]";
    }
};

struct SpanLimits {
    std::size_t max_component_dim = 5000;
    std::size_t max_generators = 5'000'000;
};

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string &what, std::size_t estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    std::size_t estimate() const noexcept { return estimate_; }

private:
    std::size_t estimate_;
};

/// One term of a certificate: the expanded generator and its coefficient.
struct CertificateTerm {
    std::string description;
    Rational coefficient;
    Element element;
};

using Certificate = std::vector<CertificateTerm>;

inline Element recombine(const Certificate &cert) {
    Element sum;
    for (auto &t : cert)
        sum += t.coefficient * t.element;
    return sum;
}

struct SeedRow {
    std::string description;
    Element element;
};

struct SpanOptions {
    std::vector<GeneratorForm> forms;  // empty: the identity's default forms
    SpanLimits limits;
    bool stop_when_full = true;
    std::vector<SeedRow> seeds;  // inserted before the generators
};

/// Row space of the consequences of one identity in one component.
class ConsequenceSpan {
public:
    ConsequenceSpan(const Multidegree &d, IdentityKind kind, const Rational &gamma, SpanOptions options = {})
        : multidegree_(d), kind_(kind), gamma_(gamma), options_(std::move(options)), space_(0) {
        if (options_.forms.empty())
            options_.forms = default_forms(kind);
        if (d.total() < 1)
            throw std::invalid_argument("consequence span of an empty multidegree");
        MonomialEnumerator en(d.size());
        Integer dim = en.count(d);
        if (dim > options_.limits.max_component_dim)
            throw CapExceeded("component " + d.str() + " has " + to_string(dim) + " monomials, limit " +
                                  std::to_string(options_.limits.max_component_dim),
                              dim.get_ui());
        columns_ = en.enumerate(d);
        for (std::size_t i = 0; i < columns_.size(); ++i)
            index_.emplace(columns_[i], i);
        space_ = RowSpace(columns_.size());
        for (std::size_t i = 0; i < options_.seeds.size(); ++i)
            space_.insert(to_row(options_.seeds[i].element), i);
        for (auto form : options_.forms) {
            if (options_.stop_when_full && space_.full())
                break;
            generate(en, form);
        }
    }

    const Multidegree &multidegree() const noexcept { return multidegree_; }
    const Rational &gamma() const noexcept { return gamma_; }
    IdentityKind kind() const noexcept { return kind_; }
    std::size_t dimension() const noexcept { return columns_.size(); }
    std::size_t rank() const noexcept { return space_.rank(); }
    bool full() const noexcept { return space_.full(); }
    std::size_t generators_examined() const noexcept { return examined_; }
    const std::vector<Monomial> &columns() const noexcept { return columns_; }
    const std::vector<Generator> &basis_generators() const noexcept { return kept_; }

    /// Coordinate row over the component's monomials. Coefficients must be
    /// constants (specialize first).
    SparseVector to_row(const Element &e) const {
        SparseVector row;
        for (auto &[m, c] : e) {
            if (!c.is_constant())
                throw std::invalid_argument("to_row: coefficient depends on g; specialize first");
            auto it = index_.find(m);
            if (it == index_.end())
                throw std::invalid_argument("to_row: monomial outside component " + multidegree_.str());
            row.emplace(it->second, c.constant_term());
        }
        return row;
    }

    bool contains(const Element &e) const { return space_.contains(to_row(e.specialize(gamma_))); }

    /// Certificate expressing e over seeds and generators, re-expanded from
    /// their descriptions; nullopt if e is not in the span.
    std::optional<Certificate> express(const Element &e, const Alphabet &alphabet = Alphabet()) const {
        auto coeffs = space_.express(to_row(e.specialize(gamma_)));
        if (!coeffs)
            return std::nullopt;
        Certificate cert;
        for (auto &[tag, c] : *coeffs) {
            if (tag < options_.seeds.size()) {
                cert.push_back({options_.seeds[tag].description, c, options_.seeds[tag].element.specialize(gamma_)});
            } else {
                const Generator &gen = kept_.at(tag - options_.seeds.size());
                cert.push_back({gen.describe(alphabet), c, gen.expand(gamma_)});
            }
        }
        return cert;
    }

    /// Independent rows (seeds first, then generators) as a dense matrix.
    RationalMatrix row_matrix() const {
        std::vector<Element> rows;
        for (auto tag : space_.basis_tags())
            rows.push_back(tag < options_.seeds.size() ? options_.seeds[tag].element.specialize(gamma_)
                                                       : kept_.at(tag - options_.seeds.size()).expand(gamma_));
        RationalMatrix m(rows.size(), columns_.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (auto &[c, v] : to_row(rows[r]))
                m(r, c) = v;
        return m;
    }

private:
    void generate(MonomialEnumerator &en, GeneratorForm form) {
        const std::size_t r = arity(form);
        const std::size_t sym = symmetric_prefix(form);
        const std::vector<int> mult = multiplicities(form);
        const int min_total = std::accumulate(mult.begin(), mult.end(), 0);
        // parts[i] such that sum mult[i] * parts[i] = left.
        auto scaled = [](Multidegree d, int k) {
            for (std::size_t v = 0; v < d.size(); ++v)
                d[v] *= k;
            return d;
        };
        const GammaPoly gamma(gamma_);
        bool stop = false;
        for_each_sub_multidegree(multidegree_, [&](const Multidegree &dc) {
            if (stop)
                return;
            Multidegree rest = multidegree_ - dc;
            if (rest.total() < min_total)
                return;
            const std::vector<Context> &ctxs = en.contexts(dc);
            std::vector<Monomial> args;
            // Ordered weighted splits of `rest` into r nonzero parts, then monomials.
            std::function<void(std::size_t, const Multidegree &)> pick_degrees;
            std::vector<Multidegree> parts(r);
            std::function<void(std::size_t)> pick_monomials = [&](std::size_t i) {
                if (stop)
                    return;
                if (i == r) {
                    Element base = expand_form(form, args, gamma);
                    if (base.is_zero())
                        return;
                    for (auto &c : ctxs) {
                        if (++examined_ > options_.limits.max_generators)
                            throw CapExceeded("more than " + std::to_string(options_.limits.max_generators) +
                                                  " generators in component " + multidegree_.str(),
                                              examined_);
                        Generator gen{form, c, args};
                        if (space_.insert(to_row(plug(c, base)), options_.seeds.size() + kept_.size()))
                            kept_.push_back(std::move(gen));
                        if (options_.stop_when_full && space_.full()) {
                            stop = true;
                            return;
                        }
                    }
                    return;
                }
                for (auto &m : en.enumerate(parts[i])) {
                    if (i > 0 && i < sym && m < args[i - 1])
                        continue;
                    args.push_back(m);
                    pick_monomials(i + 1);
                    args.pop_back();
                    if (stop)
                        return;
                }
            };
            pick_degrees = [&](std::size_t i, const Multidegree &left) {
                if (stop)
                    return;
                const int w = mult[i];
                if (i + 1 == r) {
                    if (left.is_zero())
                        return;
                    Multidegree last(left.size());
                    for (std::size_t v = 0; v < left.size(); ++v) {
                        if (left[v] % w)
                            return;
                        last[v] = left[v] / w;
                    }
                    parts[i] = last;
                    pick_monomials(0);
                    return;
                }
                for_each_sub_multidegree(left, [&](const Multidegree &di) {
                    if (di.is_zero() || stop)
                        return;
                    const Multidegree used = scaled(di, w);
                    if (!used.divides(left) || used == left)
                        return;
                    parts[i] = di;
                    pick_degrees(i + 1, left - used);
                });
            };
            pick_degrees(0, rest);
        });
    }

    Multidegree multidegree_;
    IdentityKind kind_;
    Rational gamma_;
    SpanOptions options_;
    std::vector<Monomial> columns_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
    RowSpace space_;
    std::vector<Generator> kept_;
    std::size_t examined_ = 0;
};

inline ConsequenceSpan consequence_span(const Multidegree &d, const IdentitySpec &identity, const Rational &gamma,
                                        const SpanLimits &limits = {}) {
    SpanOptions opts;
    opts.limits = limits;
    return ConsequenceSpan(d, identity.kind, gamma, std::move(opts));
}

inline std::size_t variable_count(const Element &e) { return static_cast<std::size_t>(e.max_var() + 1); }

struct ConsequenceResult {
    bool member = false;
    Certificate certificate;
    Multidegree multidegree;
    std::size_t rank = 0;
    std::size_t dimension = 0;
};

/// Decides whether e lies in the T-ideal of the identity at the given gamma.
/// A positive answer carries a certificate that has been recombined and
/// checked against e.
inline ConsequenceResult is_consequence(const Element &e, const IdentitySpec &identity, const Rational &gamma,
                                        const SpanLimits &limits = {}, const Alphabet &alphabet = Alphabet()) {
    ConsequenceResult out;
    Element target = e.specialize(gamma);
    if (target.is_zero()) {
        out.member = true;
        return out;
    }
    auto d = target.homogeneous_multidegree(variable_count(target));
    if (!d)
        throw std::invalid_argument("is_consequence: element is not homogeneous");
    out.multidegree = *d;
    ConsequenceSpan span = consequence_span(*d, identity, gamma, limits);
    out.rank = span.rank();
    out.dimension = span.dimension();
    auto cert = span.express(target, alphabet);
    if (!cert)
        return out;
    if (recombine(*cert) != target)
        throw std::logic_error("is_consequence: certificate does not recombine to the target");
    out.member = true;
    out.certificate = std::move(*cert);
    return out;
}

/// A linear combination of operator strings of one common length, all
/// applied to the same argument variable.
struct StringTerm {
    GammaPoly coefficient;
    OperatorString string;
};
using StringCombination = std::vector<StringTerm>;

inline Element apply_combination(const StringCombination &combo, const Rational &gamma) {
    Element e;
    for (auto &t : combo)
        e += t.coefficient.eval(gamma) * apply_string(t.string);
    return e;
}

struct ReducibilityResult {
    bool reducible = false;
    std::vector<std::pair<OperatorString, Rational>> shorter;  // coefficients on shorter strings
    std::vector<std::pair<OperatorString, Rational>> allowed;  // coefficients on permitted same-length strings
    Certificate consequence;                                    // remainder in the T-ideal
    Element target;
    std::size_t rank = 0;
    std::size_t dimension = 0;

    /// target == sum(shorter) + recombine(consequence), re-expanded.
    bool verify() const {
        Element sum = recombine(consequence);
        for (auto &[s, c] : shorter)
            sum += c * apply_string(s);
        for (auto &[s, c] : allowed)
            sum += c * apply_string(s);
        return sum == target;
    }
};

/// Strings L_{m1}...L_{ml}(arg), 1 <= l < max_length, with factor
/// multidegrees summing to d.
inline std::vector<OperatorString> shorter_strings(const Multidegree &d, std::size_t max_length, const Monomial &arg,
                                                   MonomialEnumerator &en) {
    std::vector<OperatorString> out;
    std::vector<Monomial> factors;
    std::function<void(const Multidegree &, std::size_t)> rec = [&](const Multidegree &left, std::size_t budget) {
        if (left.is_zero()) {
            if (!factors.empty())
                out.push_back(OperatorString{factors, arg});
            return;
        }
        if (budget == 0)
            return;
        for_each_sub_multidegree(left, [&](const Multidegree &di) {
            if (di.is_zero())
                return;
            for (auto &m : en.enumerate(di)) {
                factors.push_back(m);
                rec(left - di, budget - 1);
                factors.pop_back();
            }
        });
    };
    if (max_length > 1)
        rec(d, max_length - 1);
    return out;
}

/// Whether the combination is equivalent (modulo consequences of the
/// identity and strictly shorter strings of the same total degree) to a
/// combination of the `allowed` strings. With no allowed strings this is
/// reducibility.
inline ReducibilityResult reduce_modulo(const StringCombination &combo, const std::vector<OperatorString> &allowed,
                                        const IdentitySpec &identity, const Rational &gamma,
                                        const SpanLimits &limits = {}, const Alphabet &alphabet = Alphabet()) {
    if (combo.empty())
        throw std::invalid_argument("is_reducible: empty combination");
    const std::size_t length = combo.front().string.length();
    const Monomial arg = combo.front().string.argument;
    if (!arg.is_leaf())
        throw std::invalid_argument("is_reducible: the argument must be a variable");
    VarId nv = arg.var();
    auto check = [&](const OperatorString &s) {
        if (s.length() != length)
            throw std::invalid_argument("is_reducible: strings of different lengths");
        if (s.argument != arg)
            throw std::invalid_argument("is_reducible: strings with different arguments");
        for (auto &fac : s.factors) {
            if (fac.contains_var(arg.var()))
                throw std::invalid_argument("is_reducible: argument variable " + render(arg, alphabet) +
                                            " occurs in a factor");
            nv = std::max(nv, fac.max_var());
        }
    };
    for (auto &t : combo)
        check(t.string);
    for (auto &s : allowed)
        check(s);
    const std::size_t nvars = static_cast<std::size_t>(nv) + 1;

    ReducibilityResult out;
    out.target = apply_combination(combo, gamma);
    if (out.target.is_zero()) {
        out.reducible = true;
        return out;
    }
    auto d = out.target.homogeneous_multidegree(nvars);
    if (!d)
        throw std::invalid_argument("is_reducible: strings of different multidegrees");
    for (auto &s : allowed)
        if (apply_string(s).homogeneous_multidegree(nvars) != d)
            throw std::invalid_argument("is_reducible: allowed string " + render(s, alphabet) +
                                        " has a different multidegree");
    Multidegree string_degree = *d - Multidegree::unit(nvars, arg.var());

    MonomialEnumerator en(nvars);
    std::vector<OperatorString> shorter = shorter_strings(string_degree, length, arg, en);
    const std::size_t n_short = shorter.size();
    shorter.insert(shorter.end(), allowed.begin(), allowed.end());
    SpanOptions opts;
    opts.limits = limits;
    opts.seeds.reserve(shorter.size());
    for (auto &s : shorter)
        opts.seeds.push_back({render(s, alphabet), apply_string(s)});
    ConsequenceSpan span(*d, identity.kind, gamma, std::move(opts));
    out.rank = span.rank();
    out.dimension = span.dimension();
    auto cert = span.express(out.target, alphabet);
    if (!cert)
        return out;
    // Split seed terms (strings) from generator terms.
    std::unordered_map<std::string, std::size_t> seed_index;
    for (std::size_t i = 0; i < shorter.size(); ++i)
        seed_index.emplace(render(shorter[i], alphabet), i);
    for (auto &t : *cert) {
        auto it = seed_index.find(t.description);
        if (it == seed_index.end())
            out.consequence.push_back(std::move(t));
        else if (it->second < n_short)
            out.shorter.emplace_back(shorter[it->second], t.coefficient);
        else
            out.allowed.emplace_back(shorter[it->second], t.coefficient);
    }
    out.reducible = true;
    if (!out.verify())
        throw std::logic_error("is_reducible: certificate does not recombine to the target");
    return out;
}

/// Whether the combination is, modulo consequences of the identity, a linear
/// combination of strictly shorter strings of the same total degree.
inline ReducibilityResult is_reducible(const StringCombination &combo, const IdentitySpec &identity,
                                       const Rational &gamma, const SpanLimits &limits = {},
                                       const Alphabet &alphabet = Alphabet()) {
    return reduce_modulo(combo, {}, identity, gamma, limits, alphabet);
}

/// Convenience: a single string with coefficient 1.
inline StringCombination single(const OperatorString &s) { return {StringTerm{GammaPoly(1), s}}; }

} // namespace nilalg
