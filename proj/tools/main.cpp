// Command-line driver: curvature queries, catalog-surface checks, theorem
// verification and finite-difference cross-checks, with text or JSON reports.
// Exit codes: 0 pass, 1 verification failure, 2 usage or parameter error.

#include "commands.hpp"

#include "liegauss/errors.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

using namespace liegauss;
using namespace liegauss::cli;

int main(int argc, char** argv) {
    CLI::App app{"numerical curvature and surface verification for 3-dimensional Lie groups "
                 "with left-invariant metrics"};
    app.require_subcommand(1);

    std::string format = "text";
    bool timing = false;
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--timing", timing, "include wall-clock time in the report");

    CurvatureArgs curv;
    CLI::App* c_curv = app.add_subcommand(
        "curvature", "connection table, sectional curvatures and Ricci diagonal");
    c_curv->add_option("--unimodular", curv.unimodular, "structure constants c1,c2,c3")
        ->delimiter(',')
        ->expected(3);
    c_curv->add_option("--nonunimodular", curv.nonunimodular, "parameters xi,eta")
        ->delimiter(',')
        ->expected(2);

    VerifyArgs verify;
    CLI::App* c_verify =
        app.add_subcommand("verify", "machine-check one of the classification theorems");
    c_verify->add_option("--theorem", verify.theorem, "theorem id")
        ->required()
        ->check(CLI::IsMember({"5.1", "5.2", "5.3", "5.4", "4.5"}));
    c_verify->add_option("--c", verify.c, "structure constants c1,c2,c3 (5.1/5.2)")
        ->delimiter(',')
        ->expected(3);
    c_verify->add_option("--lambda", verify.lambda, "metric parameters l1,l2 (5.3/5.4)")
        ->delimiter(',')
        ->expected(2);
    c_verify->add_option("--xi", verify.xi, "non-unimodular xi (4.5)");
    c_verify->add_option("--eta", verify.eta, "non-unimodular eta (4.5)");
    c_verify->add_option("--grid", verify.grid, "samples per parameter axis");

    SurfaceArgs surface;
    CLI::App* c_surface =
        app.add_subcommand("surface", "evaluate a catalog surface on a grid");
    c_surface->add_option("--id", surface.id, "catalog id")->required();
    c_surface->add_option("--lambda", surface.lambda, "metric parameters l1,l2")
        ->delimiter(',')
        ->expected(2);
    c_surface->add_option("--xi", surface.xi, "non-unimodular xi");
    c_surface->add_option("--eta", surface.eta, "non-unimodular eta");
    c_surface->add_option("--grid", surface.grid, "grid points per axis");
    c_surface->add_option("--csv", surface.csv,
                          "write u,v,x,y,z,H,K,r1213,r2123 samples to this path");

    OracleArgs oracle;
    CLI::App* c_oracle = app.add_subcommand(
        "oracle", "cross-check closed-form curvature against finite differences");
    c_oracle->add_option("--model", oracle.model, "coordinate model (e11 | e2tilde)")
        ->required();
    c_oracle->add_option("--lambda", oracle.lambda, "metric parameters l1,l2")
        ->delimiter(',')
        ->expected(2);
    c_oracle->add_option("--samples", oracle.samples, "number of sample points");
    c_oracle->add_option("--seed", oracle.seed, "RNG seed for sample points");
    c_oracle->add_flag("--richardson", oracle.richardson,
                       "Richardson-extrapolate the finite differences");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        Report rep;
        if (c_curv->parsed()) rep = cmd_curvature(curv);
        else if (c_verify->parsed()) rep = cmd_verify(verify);
        else if (c_surface->parsed()) rep = cmd_surface(surface);
        else rep = cmd_oracle(oracle);

        // Timing is opt-in so that output stays byte-deterministic by default.
        rep.elapsed_ms =
            timing ? std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count()
                   : 0.0;
        if (format == "json")
            std::cout << rep.to_json_string() << "\n";
        else
            std::cout << rep.to_text();
        return rep.overall ? 0 : 1;
    } catch (const invalid_parameter_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const invalid_frame_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
