#pragma once

#include <string>
#include <vector>

namespace bigcell {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;   // counterexample or summary, free form
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool ok, std::string detail = "") {
        checks.push_back(CheckResult{std::move(name), ok, std::move(detail)});
    }
};

} // namespace bigcell
