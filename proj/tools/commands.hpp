#pragma once

#include "liegauss/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liegauss::cli {

struct CurvatureArgs {
    std::vector<double> unimodular;     // c1,c2,c3
    std::vector<double> nonunimodular;  // xi,eta
};

struct VerifyArgs {
    std::string theorem;
    std::vector<double> c;       // 5.1 / 5.2
    std::vector<double> lambda;  // 5.3 / 5.4
    double xi = 0.5;
    double eta = 0.0;
    int grid = 20;
};

struct SurfaceArgs {
    std::string id;
    std::vector<double> lambda{1.0, 1.0};
    double xi = 0.5;
    double eta = 0.0;
    int grid = 20;
    std::string csv;  // optional sample dump path
};

struct OracleArgs {
    std::string model;  // e11 | e2tilde
    std::vector<double> lambda{1.0, 1.0};
    int samples = 100;
    unsigned long seed = 0;
    bool richardson = false;
};

// Each command returns a finalized Report; the caller maps overall to the
// exit code. Parameter problems surface as liegauss exceptions (exit 2).
Report cmd_curvature(const CurvatureArgs& args);
Report cmd_verify(const VerifyArgs& args);
Report cmd_surface(const SurfaceArgs& args);
Report cmd_oracle(const OracleArgs& args);

} // namespace liegauss::cli
