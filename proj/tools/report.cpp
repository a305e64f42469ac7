#include "report.hpp"

#include <sstream>

#include "cubical/io.hpp"

namespace cli {

void Report::add(const std::string& quantity, json value, json witness, const std::string& method) {
    json entry = json::object();
    entry["quantity"] = quantity;
    entry["value"] = std::move(value);
    entry["witness"] = std::move(witness);
    entry["method"] = method;
    results.push_back(std::move(entry));
}

void Report::verdict(const std::string& name, bool pass) {
    verdicts[name] = pass ? "pass" : "fail";
    if (!pass) exit_code = kVerdictNegative;
}

void Report::set_input(const std::string& path, const std::string& text) {
    input["path"] = path;
    input["digest"] = cubical::io::digest(text);
}

json to_json(const Report& r, double duration_ms) {
    json out = json::object();
    out["command"] = r.command;
    out["input"] = r.input;
    out["parameters"] = r.parameters;
    for (const auto& [k, v] : r.verdicts.items()) out[k] = v;
    out["results"] = r.results;
    out["notes"] = r.notes;
    out["anchors"] = r.anchors;
    out["duration_ms"] = duration_ms;
    return out;
}

std::string to_text(const Report& r, double duration_ms) {
    std::ostringstream out;
    out << r.command;
    if (r.input.contains("path")) out << "  " << r.input["path"].get<std::string>() << "  [" << r.input["digest"].get<std::string>() << "]";
    out << '\n';
    if (!r.parameters.empty()) out << "parameters: " << r.parameters.dump() << '\n';
    for (const auto& [k, v] : r.verdicts.items()) out << k << ": " << v.get<std::string>() << '\n';
    for (const auto& e : r.results) {
        out << e["quantity"].get<std::string>() << " = ";
        if (e["value"].is_string()) out << e["value"].get<std::string>();
        else out << e["value"].dump();
        out << "  (" << e["method"].get<std::string>() << ")\n";
        if (!e["witness"].is_null()) out << "  witness: " << e["witness"].dump() << '\n';
    }
    for (const auto& n : r.notes) out << "note: " << n << '\n';
    out << "time: " << duration_ms << " ms\n";
    return out.str();
}

}  // namespace cli
