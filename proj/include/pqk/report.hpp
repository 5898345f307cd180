#pragma once

// Machine-readable verification reports. JSON output is built with ordered
// maps and exact scalar strings only, so byte-identical reruns are the
// contract in exact mode.

#include "pqk/scalar.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace pqk {

using ordered_json = nlohmann::ordered_json;

enum class CheckStatus { pass, fail, informational };

inline const char* to_string(CheckStatus s)
{
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "informational";
    }
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string value;   // witness or computed value, already formatted
    std::string anchor;  // the claim the check verifies, or "plumbing"
};

struct VerificationReport {
    std::string suite;
    std::string mode = "exact";  // exact | float
    ordered_json parameters = ordered_json::object();
    ordered_json conventions = ordered_json::object();
    std::vector<CheckResult> checks;

    void add(std::string name, bool ok, std::string value, std::string anchor)
    {
        checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail,
                          std::move(value), std::move(anchor)});
    }

    void info(std::string name, std::string value, std::string anchor)
    {
        checks.push_back(
            {std::move(name), CheckStatus::informational, std::move(value), std::move(anchor)});
    }

    bool failed() const
    {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return true;
        return false;
    }

    std::size_t count(CheckStatus s) const
    {
        std::size_t k = 0;
        for (const auto& c : checks)
            if (c.status == s) ++k;
        return k;
    }

    ordered_json to_json() const
    {
        ordered_json j;
        j["schema"] = 1;
        j["suite"] = suite;
        j["mode"] = mode;
        j["parameters"] = parameters;
        j["conventions"] = conventions;
        auto arr = ordered_json::array();
        for (const auto& c : checks) {
            ordered_json cj;
            cj["name"] = c.name;
            cj["status"] = to_string(c.status);
            cj["value"] = c.value;
            cj["anchor"] = c.anchor;
            arr.push_back(std::move(cj));
        }
        j["checks"] = std::move(arr);
        j["summary"] = {{"pass", count(CheckStatus::pass)},
                        {"fail", count(CheckStatus::fail)},
                        {"informational", count(CheckStatus::informational)}};
        return j;
    }

    void print_human(std::ostream& os) const
    {
        os << "== " << suite << " (" << mode << " mode)\n";
        if (!parameters.empty()) os << "   parameters: " << parameters.dump() << "\n";
        for (const auto& c : checks) {
            const char* tag = c.status == CheckStatus::pass
                                  ? "PASS"
                                  : (c.status == CheckStatus::fail ? "FAIL" : "info");
            os << "  [" << tag << "] " << c.name;
            if (!c.value.empty()) os << " : " << c.value;
            os << "\n";
        }
        os << "   summary: " << count(CheckStatus::pass) << " pass, " << count(CheckStatus::fail)
           << " fail, " << count(CheckStatus::informational) << " informational\n";
    }
};

// Merges sub-reports into an aggregate (used by the full suite); sub-reports
// keep their own parameter blocks inside a "reports" array.
struct SuiteReport {
    std::string suite;
    std::string mode = "exact";
    std::vector<VerificationReport> reports;

    bool failed() const
    {
        for (const auto& r : reports)
            if (r.failed()) return true;
        return false;
    }

    ordered_json to_json() const
    {
        ordered_json j;
        j["schema"] = 1;
        j["suite"] = suite;
        j["mode"] = mode;
        auto arr = ordered_json::array();
        std::size_t pass = 0, fail = 0, info = 0;
        for (const auto& r : reports) {
            arr.push_back(r.to_json());
            pass += r.count(CheckStatus::pass);
            fail += r.count(CheckStatus::fail);
            info += r.count(CheckStatus::informational);
        }
        j["reports"] = std::move(arr);
        j["summary"] = {{"pass", pass}, {"fail", fail}, {"informational", info}};
        return j;
    }

    void print_human(std::ostream& os) const
    {
        std::size_t pass = 0, fail = 0, info = 0;
        for (const auto& r : reports) {
            r.print_human(os);
            pass += r.count(CheckStatus::pass);
            fail += r.count(CheckStatus::fail);
            info += r.count(CheckStatus::informational);
        }
        os << "== total: " << pass << " pass, " << fail << " fail, " << info
           << " informational\n";
    }
};

}  // namespace pqk
