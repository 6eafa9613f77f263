#include "hopfbundle/report.hpp"

#include <sstream>
#include <utility>

namespace hopfbundle {

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass:
            return "pass";
        case CheckStatus::Fail:
            return "fail";
        case CheckStatus::Assumed:
            return "assumed";
    }
    return "fail";
}

void Report::add(std::string name, CheckStatus status, std::string details,
                 nlohmann::json certificate) {
    checks.push_back({std::move(name), status, std::move(details), std::move(certificate)});
}

void Report::add_pass(std::string name, std::string details, nlohmann::json certificate) {
    add(std::move(name), CheckStatus::Pass, std::move(details), std::move(certificate));
}

void Report::add_fail(std::string name, std::string details, nlohmann::json certificate) {
    add(std::move(name), CheckStatus::Fail, std::move(details), std::move(certificate));
}

long Report::count(CheckStatus status) const {
    long n = 0;
    for (const CheckResult& check : checks)
        if (check.status == status) ++n;
    return n;
}

bool Report::all_ok() const { return count(CheckStatus::Fail) == 0; }

nlohmann::json to_json(const Report& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& check : report.checks)
        checks.push_back({{"name", check.name},
                          {"status", to_string(check.status)},
                          {"details", check.details},
                          {"certificate", check.certificate}});
    return {{"spec",
             {{"a", report.a},
              {"b", report.b},
              {"c", report.c},
              {"lambda", to_string(report.lambda)}}},
            {"checks", checks},
            {"summary",
             {{"pass", report.count(CheckStatus::Pass)},
              {"fail", report.count(CheckStatus::Fail)},
              {"assumed", report.count(CheckStatus::Assumed)}}},
            {"version", report.version}};
}

std::string render_text(const Report& report) {
    std::ostringstream out;
    if (report.a != 0)
        out << "spec: a=" << report.a << " b=" << report.b << " c=" << report.c
            << " lambda=" << to_string(report.lambda) << "\n";
    for (const CheckResult& check : report.checks)
        out << "[" << to_string(check.status) << "] " << check.name << ": " << check.details
            << "\n";
    out << "summary: " << report.count(CheckStatus::Pass) << " passed, "
        << report.count(CheckStatus::Fail) << " failed, " << report.count(CheckStatus::Assumed)
        << " assumed\n";
    return out.str();
}

}  // namespace hopfbundle
