#pragma once

/// Machine-checkable reports: named checks with expected/computed values and
/// residuals. Serializes to line-delimited key-value text and to JSON; the
/// JSON form round-trips losslessly.

#include <string>
#include <utility>
#include <vector>

namespace liegauss {

struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    double residual = 0.0;
    bool pass = false;

    bool operator==(const Check&) const = default;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> values;
    std::vector<Check> checks;
    bool overall = true;
    double elapsed_ms = 0.0;

    bool operator==(const Report&) const = default;

    void add_input(const std::string& key, const std::string& val);
    void add_input(const std::string& key, double val);
    void add_value(const std::string& key, const std::string& val);
    void add_value(const std::string& key, double val);
    /// pass iff |computed - expected| <= tol; residual is the difference.
    Check& check_close(const std::string& name, double expected, double computed, double tol);
    /// pass iff residual <= bound.
    Check& check_bound(const std::string& name, double residual, double bound);
    Check& check_flag(const std::string& name, bool expected, bool computed);
    Check& check_text(const std::string& name, const std::string& expected,
                      const std::string& computed);

    bool all_pass() const;
    /// Recomputes `overall` from the checks and returns it.
    bool finalize();

    std::string to_text() const;
    std::string to_json_string(int indent = 2) const;
    static Report from_json_string(const std::string& json);
};

/// Fixed-width significant-digit formatting used across reports (12 digits).
std::string format_number(double x, int significant = 12);

} // namespace liegauss
