#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hopfbundle/rational.hpp"

namespace hopfbundle {

// Outcome of one verification step. Assumed marks the documented analytic
// inputs that are imported rather than machine-checked; they never count as
// failures but are always listed so the report cannot overclaim.
enum class CheckStatus { Pass, Fail, Assumed };

std::string to_string(CheckStatus status);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Fail;
    std::string details;
    // Structured evidence: obstruction exponents, group elements,
    // dimensions, witness samples. Null when there is nothing structured.
    nlohmann::json certificate = nullptr;
};

struct Report {
    // Echo of the verified member; all zero for point-set reports that have
    // no manifold attached.
    long a = 0;
    long b = 0;
    long c = 0;
    Rational lambda = Rational(0);
    std::vector<CheckResult> checks;
    std::string version = "1.0.0";

    void add(std::string name, CheckStatus status, std::string details,
             nlohmann::json certificate = nullptr);
    void add_pass(std::string name, std::string details, nlohmann::json certificate = nullptr);
    void add_fail(std::string name, std::string details, nlohmann::json certificate = nullptr);

    long count(CheckStatus status) const;
    bool all_ok() const;  // no failures
};

// Canonical serialization: alphabetically ordered keys, integers and exact
// strings only, so parse + re-serialize is byte-identical.
nlohmann::json to_json(const Report& report);

std::string render_text(const Report& report);

}  // namespace hopfbundle
