#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace unischubert::cli {

struct SuiteResult {
    std::string name;
    int n = 0;
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

struct Suite {
    std::string name;
    std::string summary;
    int default_n;
    std::function<SuiteResult(int n, int jobs)> run;
};

const std::vector<Suite>& suites();
const Suite* find_suite(const std::string& name);

nlohmann::json to_json(const SuiteResult& r);

} // namespace unischubert::cli
