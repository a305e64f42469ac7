#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace cli {

using json = nlohmann::ordered_json;

enum ExitCode { kComputed = 0, kVerdictNegative = 1, kInputError = 2 };

struct Report {
    std::string command;
    json input = json::object();
    json parameters = json::object();
    json verdicts = json::object();  // flattened into the top level
    json results = json::array();
    std::vector<std::string> notes;
    std::vector<std::string> anchors;
    int exit_code = kComputed;

    // Every numeric result carries a method tag: exact, lower_bound or one_sided.
    void add(const std::string& quantity, json value, json witness = nullptr, const std::string& method = "exact");
    // Records a pass/fail verdict; a failure makes the exit code 1.
    void verdict(const std::string& name, bool pass);
    void set_input(const std::string& path, const std::string& text);
};

json to_json(const Report& r, double duration_ms);
std::string to_text(const Report& r, double duration_ms);

}  // namespace cli
