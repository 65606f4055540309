#pragma once

// Structured outcome of a named verification.

#include "nilalg/consequence.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilalg {

enum class Status { Pass, Fail, Unsupported };

inline const char *to_string(Status s) {
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    default:
        return "unsupported";
    }
}

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct NamedCertificate {
    std::string name;
    std::vector<std::pair<std::string, std::string>> terms;  // (generator, coefficient)
};

class Report {
public:
    explicit Report(std::string name) : name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}

    const std::string &name() const noexcept { return name_; }

    /// Pass iff every check passed; unsupported if marked so.
    Status status() const {
        if (unsupported_)
            return Status::Unsupported;
        if (checks_.empty())
            return Status::Fail;
        for (auto &c : checks_)
            if (!c.passed)
                return Status::Fail;
        return Status::Pass;
    }
    bool passed() const { return status() == Status::Pass; }

    bool check(std::string name, bool passed, std::string detail = {}) {
        checks_.push_back({std::move(name), passed, std::move(detail)});
        return passed;
    }
    const std::vector<Check> &checks() const noexcept { return checks_; }

    /// The first failed check, if any.
    const Check *witness() const {
        for (auto &c : checks_)
            if (!c.passed)
                return &c;
        return nullptr;
    }

    void value(std::string key, std::string v) { values_.emplace_back(std::move(key), std::move(v)); }
    const std::vector<std::pair<std::string, std::string>> &values() const noexcept { return values_; }
    std::optional<std::string> find_value(std::string_view key) const {
        for (auto &[k, v] : values_)
            if (k == key)
                return v;
        return std::nullopt;
    }

    void certificate(std::string name, const Certificate &cert) {
        NamedCertificate nc{std::move(name), {}};
        for (auto &t : cert)
            nc.terms.emplace_back(t.description, to_string(t.coefficient));
        certificates_.push_back(std::move(nc));
    }
    void certificate(std::string name, const ReducibilityResult &r, const Alphabet &alphabet = Alphabet()) {
        NamedCertificate nc{std::move(name), {}};
        for (auto &[s, c] : r.shorter)
            nc.terms.emplace_back(render(s, alphabet), to_string(c));
        for (auto &[s, c] : r.allowed)
            nc.terms.emplace_back(render(s, alphabet), to_string(c));
        for (auto &t : r.consequence)
            nc.terms.emplace_back(t.description, to_string(t.coefficient));
        certificates_.push_back(std::move(nc));
    }
    const std::vector<NamedCertificate> &certificates() const noexcept { return certificates_; }

    void discrepancy(std::string note) { discrepancies_.push_back(std::move(note)); }
    const std::vector<std::string> &discrepancies() const noexcept { return discrepancies_; }

    void note(std::string text) { notes_.push_back(std::move(text)); }
    const std::vector<std::string> &notes() const noexcept { return notes_; }

    void mark_unsupported(std::string reason) {
        unsupported_ = true;
        notes_.push_back(std::move(reason));
    }
    /// Set when a resource cap cut the computation short.
    void mark_partial(std::string reason) {
        partial_ = true;
        notes_.push_back(std::move(reason));
    }
    bool partial() const noexcept { return partial_; }

    void finish() {
        duration_ms_ =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }
    double duration_ms() const noexcept { return duration_ms_; }

    /// With include_timing false, duration_ms is null so equal runs give
    /// byte-identical output.
    nlohmann::ordered_json to_json(bool include_timing = false) const {
        nlohmann::ordered_json j;
        j["name"] = name_;
        j["status"] = to_string(status());
        j["partial"] = partial_;
        auto &checks = j["checks"] = nlohmann::ordered_json::array();
        for (auto &c : checks_)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        if (auto *w = witness())
            j["witness"] = w->name + (w->detail.empty() ? "" : ": " + w->detail);
        else
            j["witness"] = nullptr;
        auto &vals = j["values"] = nlohmann::ordered_json::object();
        for (auto &[k, v] : values_)
            vals[k] = v;
        auto &certs = j["certificates"] = nlohmann::ordered_json::array();
        for (auto &c : certificates_) {
            nlohmann::ordered_json terms = nlohmann::ordered_json::array();
            for (auto &[g, coef] : c.terms)
                terms.push_back({{"generator", g}, {"coefficient", coef}});
            certs.push_back({{"name", c.name}, {"terms", std::move(terms)}});
        }
        j["discrepancies"] = discrepancies_;
        j["notes"] = notes_;
        if (include_timing)
            j["duration_ms"] = duration_ms_;
        else
            j["duration_ms"] = nullptr;
        return j;
    }

    /// Human-readable summary; certificates are listed by size only.
    std::string to_text(bool include_timing = false) const {
        std::string out = name_ + ": " + to_string(status()) + (partial_ ? " (partial)" : "");
        if (include_timing)
            out += " [" + std::to_string(static_cast<long long>(duration_ms_)) + " ms]";
        out += "\n";
        for (auto &c : checks_)
            out += std::string("  [") + (c.passed ? "ok" : "FAIL") + "] " + c.name +
                   (c.detail.empty() ? "" : ": " + c.detail) + "\n";
        for (auto &[k, v] : values_)
            out += "  " + k + " = " + v + "\n";
        for (auto &c : certificates_)
            out += "  certificate " + c.name + ": " + std::to_string(c.terms.size()) + " terms\n";
        for (auto &d : discrepancies_)
            out += "  discrepancy: " + d + "\n";
        for (auto &n : notes_)
            out += "  note: " + n + "\n";
        return out;
    }

private:
    std::string name_;
    std::chrono::steady_clock::time_point start_;
    std::vector<Check> checks_;
    std::vector<std::pair<std::string, std::string>> values_;
    std::vector<NamedCertificate> certificates_;
    std::vector<std::string> discrepancies_;
    std::vector<std::string> notes_;
    bool unsupported_ = false;
    bool partial_ = false;
    double duration_ms_ = 0;
};

} // namespace nilalg
