#include "liegauss/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace liegauss {

std::string format_number(double x, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, x);
    return buf;
}

void Report::add_input(const std::string& key, const std::string& val) {
    inputs.emplace_back(key, val);
}

void Report::add_input(const std::string& key, double val) {
    inputs.emplace_back(key, format_number(val));
}

void Report::add_value(const std::string& key, const std::string& val) {
    values.emplace_back(key, val);
}

void Report::add_value(const std::string& key, double val) {
    values.emplace_back(key, format_number(val));
}

Check& Report::check_close(const std::string& name, double expected, double computed,
                           double tol) {
    Check c;
    c.name = name;
    c.expected = format_number(expected);
    c.computed = format_number(computed);
    c.residual = std::abs(computed - expected);
    c.pass = c.residual <= tol;
    checks.push_back(std::move(c));
    return checks.back();
}

Check& Report::check_bound(const std::string& name, double residual, double bound) {
    Check c;
    c.name = name;
    c.expected = "<= " + format_number(bound);
    c.computed = format_number(residual);
    c.residual = residual;
    c.pass = std::abs(residual) <= bound;
    checks.push_back(std::move(c));
    return checks.back();
}

Check& Report::check_flag(const std::string& name, bool expected, bool computed) {
    Check c;
    c.name = name;
    c.expected = expected ? "true" : "false";
    c.computed = computed ? "true" : "false";
    c.residual = expected == computed ? 0.0 : 1.0;
    c.pass = expected == computed;
    checks.push_back(std::move(c));
    return checks.back();
}

Check& Report::check_text(const std::string& name, const std::string& expected,
                          const std::string& computed) {
    Check c;
    c.name = name;
    c.expected = expected;
    c.computed = computed;
    c.residual = expected == computed ? 0.0 : 1.0;
    c.pass = expected == computed;
    checks.push_back(std::move(c));
    return checks.back();
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

bool Report::finalize() {
    overall = all_pass();
    return overall;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    for (const auto& [k, v] : inputs) os << "input " << k << ": " << v << "\n";
    for (const auto& [k, v] : values) os << k << ": " << v << "\n";
    for (const auto& c : checks)
        os << "check " << c.name << ": expected=" << c.expected << " computed=" << c.computed
           << " residual=" << format_number(c.residual) << " " << (c.pass ? "pass" : "FAIL")
           << "\n";
    os << "overall: " << (overall ? "PASS" : "FAIL") << "\n";
    os << "elapsed_ms: " << format_number(elapsed_ms) << "\n";
    return os.str();
}

std::string Report::to_json_string(int indent) const {
    nlohmann::json j;
    j["command"] = command;
    j["inputs"] = nlohmann::json::array();
    for (const auto& [k, v] : inputs) j["inputs"].push_back({{"key", k}, {"value", v}});
    j["values"] = nlohmann::json::array();
    for (const auto& [k, v] : values) j["values"].push_back({{"key", k}, {"value", v}});
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"name", c.name},
                               {"expected", c.expected},
                               {"computed", c.computed},
                               {"residual", c.residual},
                               {"pass", c.pass}});
    j["overall"] = overall;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(indent);
}

Report Report::from_json_string(const std::string& json) {
    const nlohmann::json j = nlohmann::json::parse(json);
    Report r;
    r.command = j.at("command").get<std::string>();
    for (const auto& e : j.at("inputs"))
        r.inputs.emplace_back(e.at("key").get<std::string>(), e.at("value").get<std::string>());
    for (const auto& e : j.at("values"))
        r.values.emplace_back(e.at("key").get<std::string>(), e.at("value").get<std::string>());
    for (const auto& e : j.at("checks")) {
        Check c;
        c.name = e.at("name").get<std::string>();
        c.expected = e.at("expected").get<std::string>();
        c.computed = e.at("computed").get<std::string>();
        c.residual = e.at("residual").get<double>();
        c.pass = e.at("pass").get<bool>();
        r.checks.push_back(std::move(c));
    }
    r.overall = j.at("overall").get<bool>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

} // namespace liegauss
