#include "commands.hpp"

#include "liegauss/catalog.hpp"
#include "liegauss/classification.hpp"
#include "liegauss/errors.hpp"
#include "liegauss/gaussmap.hpp"
#include "liegauss/oracle.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace liegauss::cli {

namespace {

std::string triple_to_string(const Eigen::Vector3d& v) {
    return "(" + format_number(v(0)) + ", " + format_number(v(1)) + ", " + format_number(v(2)) +
           ")";
}

std::string cases_to_string(const std::set<Lemma33Case>& cases) {
    std::string out;
    for (auto c : cases) {
        if (!out.empty()) out += ",";
        out += to_string(c);
    }
    return out;
}

GroupSpec spec_from(const CurvatureArgs& args) {
    const bool uni = !args.unimodular.empty(), non = !args.nonunimodular.empty();
    if (uni == non)
        throw invalid_parameter_error(
            "curvature: exactly one of --unimodular and --nonunimodular is required");
    if (uni) {
        if (args.unimodular.size() != 3)
            throw invalid_parameter_error("curvature: --unimodular takes c1,c2,c3");
        return GroupSpec::unimodular(args.unimodular[0], args.unimodular[1],
                                     args.unimodular[2]);
    }
    if (args.nonunimodular.size() != 2)
        throw invalid_parameter_error("curvature: --nonunimodular takes xi,eta");
    return GroupSpec::nonunimodular(args.nonunimodular[0], args.nonunimodular[1]);
}

std::pair<double, double> lambda_pair(const std::vector<double>& lambda,
                                      const std::string& who) {
    if (lambda.size() != 2) throw invalid_parameter_error(who + ": --lambda takes l1,l2");
    return {lambda[0], lambda[1]};
}

} // namespace

Report cmd_curvature(const CurvatureArgs& args) {
    const GroupSpec spec = spec_from(args);
    Report rep;
    rep.command = "curvature";
    if (spec.is_unimodular()) {
        const auto& u = spec.unimodular_spec();
        rep.add_input("family", "unimodular");
        rep.add_input("c1", u.c1);
        rep.add_input("c2", u.c2);
        rep.add_input("c3", u.c3);
        rep.add_value("class", to_string(classify_unimodular(u)));
    } else {
        const auto& n = spec.nonunimodular_spec();
        rep.add_input("family", "nonunimodular");
        rep.add_input("xi", n.xi);
        rep.add_input("eta", n.eta);
    }
    rep.add_value("isometry_dimension_hint", double(isometry_dimension_hint(spec)));

    const ConnectionTable conn = levi_civita(spec);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            std::ostringstream key;
            key << "nabla[e" << i << "]e" << j;
            rep.add_value(key.str(), triple_to_string(conn.covariant(i, j)));
        }

    const CurvatureData R = riemann_tensor(spec);
    rep.add_value("K12", R.K12);
    rep.add_value("K23", R.K23);
    rep.add_value("K13", R.K13);
    rep.add_value("ricci", triple_to_string(R.ricci));

    // Internal cross-validation: the oracle connection, the closed-form
    // curvatures and the Ricci shape of the frame.
    const ConnectionTable koszul = koszul_connection(spec);
    double conn_res = 0.0;
    for (size_t k = 0; k < conn.coeffs.size(); ++k)
        conn_res = std::max(conn_res, std::abs(conn.coeffs[k] - koszul.coeffs[k]));
    rep.check_bound("connection_matches_koszul_oracle", conn_res, 1e-13);

    const SectionalTriple K = sectional_closed_form(spec);
    const double k_res = std::max({std::abs(R.K12 - K.K12), std::abs(R.K23 - K.K23),
                                   std::abs(R.K13 - K.K13)});
    rep.check_bound("sectional_matches_closed_form", k_res, 1e-12);

    double ric_off = 0.0;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            if (a == b) continue;
            double ric = 0.0;
            for (int i = 1; i <= 3; ++i) ric += R.R(i, a, b, i);
            ric_off = std::max(ric_off, std::abs(ric));
        }
    rep.check_bound("ricci_diagonalized", ric_off, 1e-12);

    rep.finalize();
    return rep;
}

Report cmd_verify(const VerifyArgs& args) {
    TheoremParams params;
    params.grid = args.grid;
    if (!args.c.empty()) {
        if (args.c.size() != 3) throw invalid_parameter_error("verify: --c takes c1,c2,c3");
        params.c1 = args.c[0];
        params.c2 = args.c[1];
        params.c3 = args.c[2];
    }
    if (!args.lambda.empty()) {
        auto [l1, l2] = lambda_pair(args.lambda, "verify");
        params.lambda1 = l1;
        params.lambda2 = l2;
    }
    params.xi = args.xi;
    params.eta = args.eta;

    const TheoremReport tr = verify_theorem(args.theorem, params);
    return to_report(tr, "verify");
}

namespace {

Report surface_patch_report(const SurfaceArgs& args) {
    auto [l1, l2] = lambda_pair(args.lambda, "surface");
    const ImmersedPatch patch = catalog_patch(args.id, l1, l2);
    const CurvatureData R = riemann_tensor(patch.model().group_spec());
    const int n = std::max(2, args.grid);

    std::ofstream csv;
    if (!args.csv.empty()) {
        csv.open(args.csv);
        if (!csv) throw invalid_parameter_error("surface: cannot open csv path " + args.csv);
        csv << "u,v,x,y,z,H,K,r1213,r2123\n";
    }

    double max_h = 0.0, max_k = 0.0, max_vert = 0.0, max_gap = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const double u = -2.0 + 4.0 * a / (n - 1), v = -2.0 + 4.0 * b / (n - 1);
            const SurfaceJet jet = surface_jet(patch, u, v);
            const auto [r1, r2] = vertical_residuals(R, jet);
            const double Kp = sectional_of_plane(R.R, jet.canonical_components.col(0),
                                                 jet.canonical_components.col(1));
            const double K = gauss_curvature(jet, Kp);
            max_h = std::max(max_h, std::abs(jet.h_trace));
            max_k = std::max(max_k, std::abs(K));
            max_vert = std::max({max_vert, std::abs(r1), std::abs(r2)});
            max_gap = std::max(max_gap, std::abs(harmonicity_residual(R, jet)));
            if (csv.is_open())
                csv << format_number(u) << "," << format_number(v) << ","
                    << format_number(jet.point.x) << "," << format_number(jet.point.y) << ","
                    << format_number(jet.point.z) << "," << format_number(jet.h_norm) << ","
                    << format_number(K) << "," << format_number(r1) << "," << format_number(r2)
                    << "\n";
        }

    Report rep;
    rep.command = "surface";
    rep.add_input("id", args.id);
    rep.add_input("lambda1", l1);
    rep.add_input("lambda2", l2);
    rep.add_input("grid", double(n));
    rep.add_value("max_abs_H_trace", max_h);
    rep.add_value("max_abs_K", max_k);
    rep.add_value("max_vertical_residual", max_vert);
    rep.add_value("max_harmonicity_gap", max_gap);
    const SurfaceJet sample = surface_jet(patch, 0.4, -0.7);
    rep.add_value("normal_case",
                  cases_to_string(lemma33_classify(R.sectional(),
                                                   sample.canonical_components.col(2))));

    const bool equal_lambda = std::abs(l1 - l2) < 1e-12;
    if (args.id == "thm53-i") {
        rep.check_bound("minimal", max_h, 1e-8);
        rep.check_bound("flat", max_k, 1e-10);
        rep.check_bound("vertically_harmonic", max_vert, 1e-9);
        rep.check_bound("harmonic_gauss_map", max_gap, 1e-9);
    } else if (args.id == "thm53-ii") {
        if (equal_lambda) {
            rep.check_bound("minimal", max_h, 1e-8);
            rep.check_bound("vertically_harmonic", max_vert, 1e-9);
        } else {
            rep.check_flag("excluded_for_unequal_lambda", true, max_vert > 1e-3);
        }
    } else {  // thm54
        rep.check_bound("minimal", max_h, 1e-8);
        rep.check_bound("vertically_harmonic", max_vert, 1e-9);
        rep.check_bound("harmonic_gauss_map", max_gap, 1e-9);
    }
    rep.finalize();
    return rep;
}

Report surface_frame_report(const SurfaceArgs& args) {
    if (!args.csv.empty())
        throw invalid_parameter_error(
            "surface: --csv applies to coordinate patches, not invariant frame surfaces");
    const FrameSurfaceSpec spec = catalog_frame_surface(args.id, args.xi, args.eta);
    const InvariantJet jet = invariant_surface_jet(spec);
    const CurvatureData R = riemann_tensor(spec.group);
    const double Kp = sectional_of_plane(R.R, jet.canonical_components.col(0),
                                         jet.canonical_components.col(1));
    const double K = gauss_curvature(jet, Kp);
    const auto [r1, r2] = vertical_residuals(R, jet);

    Report rep;
    rep.command = "surface";
    rep.add_input("id", args.id);
    rep.add_input("xi", args.xi);
    rep.add_input("eta", args.eta);
    rep.add_value("integrable", jet.integrable ? "true" : "false");
    rep.add_value("H_trace", jet.h_trace);
    rep.add_value("H_norm", jet.h_norm);
    rep.add_value("K", K);
    rep.add_value("r1213", r1);
    rep.add_value("r2123", r2);
    rep.add_value("normal_case", cases_to_string(lemma33_classify(
                                     R.sectional(), jet.canonical_components.col(2))));

    const bool eta_zero = std::abs(args.eta) < 1e-12;
    if (args.id == "nonuni-e23") {
        rep.check_flag("integrable", true, jet.integrable);
        rep.check_close("H_norm", 1.0, jet.h_norm, 1e-12);
        rep.check_bound("flat", K, 1e-12);
        rep.check_bound("vertically_harmonic", std::max(std::abs(r1), std::abs(r2)), 1e-9);
    } else {
        rep.check_flag("integrable_iff_eta_zero", eta_zero, jet.integrable);
        if (jet.integrable)
            rep.check_bound("totally_geodesic", jet.shape.cwiseAbs().maxCoeff(), 1e-12);
    }
    rep.finalize();
    return rep;
}

} // namespace

Report cmd_surface(const SurfaceArgs& args) {
    if (is_catalog_patch_id(args.id)) return surface_patch_report(args);
    if (is_catalog_frame_id(args.id)) return surface_frame_report(args);
    throw invalid_parameter_error("surface: unknown catalog id '" + args.id + "'");
}

Report cmd_oracle(const OracleArgs& args) {
    auto [l1, l2] = lambda_pair(args.lambda, "oracle");
    CoordModel model = [&] {
        if (args.model == "e11") return e11_model(l1, l2);
        if (args.model == "e2tilde") return e2tilde_model(l1, l2);
        throw invalid_parameter_error("oracle: --model must be e11 or e2tilde");
    }();
    if (args.samples < 1) throw invalid_parameter_error("oracle: --samples must be >= 1");

    const SectionalTriple K = sectional_closed_form(model.group_spec());
    FDConfig cfg;
    cfg.richardson = args.richardson;

    std::mt19937_64 rng(args.seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    double worst = 0.0;
    for (int s = 0; s < args.samples; ++s) {
        const FrameCurvature fc = fd_riemann_frame(model, {d(rng), d(rng), d(rng)}, cfg);
        worst = std::max({worst, std::abs(fc.sectional.K12 - K.K12),
                          std::abs(fc.sectional.K23 - K.K23),
                          std::abs(fc.sectional.K13 - K.K13)});
    }

    Report rep;
    rep.command = "oracle";
    rep.add_input("model", args.model);
    rep.add_input("lambda1", l1);
    rep.add_input("lambda2", l2);
    rep.add_input("samples", double(args.samples));
    rep.add_input("seed", double(args.seed));
    rep.add_value("K12", K.K12);
    rep.add_value("K23", K.K23);
    rep.add_value("K13", K.K13);
    rep.add_value("max_deviation", worst);
    rep.check_bound("fd_matches_closed_form", worst, 1e-5);
    rep.finalize();
    return rep;
}

} // namespace liegauss::cli
