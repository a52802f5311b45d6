#pragma once
#include <string>
#include <vector>

namespace hb {

// One named check inside a suite. `informational` items record a measured
// fact (e.g. the truth value of a questionable identity) without affecting
// the suite verdict.
struct CheckItem {
    std::string name;
    bool pass = false;
    bool informational = false;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<CheckItem> items;

    Report() = default;
    explicit Report(std::string s) : suite(std::move(s)) {}

    void add(std::string name, bool pass, std::string detail = "") {
        items.push_back({std::move(name), pass, false, std::move(detail)});
    }
    void info(std::string name, bool value, std::string detail = "") {
        items.push_back({std::move(name), value, true, std::move(detail)});
    }
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.informational && !it.pass) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& it : items)
            if (!it.informational && !it.pass) ++n;
        return n;
    }
};

} // namespace hb
