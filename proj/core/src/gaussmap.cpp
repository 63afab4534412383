#include "liegauss/gaussmap.hpp"

#include "liegauss/errors.hpp"

#include <cmath>

namespace liegauss {

const char* to_string(Lemma33Case c) {
    switch (c) {
        case Lemma33Case::I: return "i";
        case Lemma33Case::II: return "ii";
        case Lemma33Case::III: return "iii";
        case Lemma33Case::IV: return "iv";
        case Lemma33Case::V: return "v";
        case Lemma33Case::VI: return "vi";
        case Lemma33Case::VII: return "vii";
    }
    return "?";
}

namespace {

template <typename Jet>
Eigen::Matrix3d principal_components_of(const Jet& jet) {
    // Rotate the orthonormal tangent pair into principal directions; umbilic
    // jets keep the Gram-Schmidt basis (principal_directions is identity).
    const Eigen::Matrix3d& Q = jet.canonical_components;
    const Eigen::Matrix2d& P = jet.principal_directions;
    Eigen::Matrix3d out;
    out.col(0) = Q.col(0) * P(0, 0) + Q.col(1) * P(1, 0);
    out.col(1) = Q.col(0) * P(0, 1) + Q.col(1) * P(1, 1);
    out.col(2) = Q.col(2);
    return out;
}

} // namespace

Eigen::Matrix3d principal_frame_components(const SurfaceJet& jet) {
    return principal_components_of(jet);
}

Eigen::Matrix3d principal_frame_components(const InvariantJet& jet) {
    return principal_components_of(jet);
}

std::pair<double, double> vertical_residuals(const CurvatureData& R, const Eigen::Matrix3d& Q) {
    const double r1213 =
        curvature_component(R.R, Q.col(0), Q.col(1), Q.col(0), Q.col(2));
    const double r2123 =
        curvature_component(R.R, Q.col(1), Q.col(0), Q.col(1), Q.col(2));
    return {r1213, r2123};
}

std::pair<double, double> vertical_residuals(const CurvatureData& R, const SurfaceJet& jet) {
    return vertical_residuals(R, principal_frame_components(jet));
}

std::pair<double, double> vertical_residuals(const CurvatureData& R, const InvariantJet& jet) {
    return vertical_residuals(R, principal_frame_components(jet));
}

double harmonicity_residual(const CurvatureData& R, const Eigen::Matrix3d& Q) {
    const double r3113 =
        curvature_component(R.R, Q.col(2), Q.col(0), Q.col(0), Q.col(2));
    const double r3223 =
        curvature_component(R.R, Q.col(2), Q.col(1), Q.col(1), Q.col(2));
    return r3113 - r3223;
}

double harmonicity_residual(const CurvatureData& R, const SurfaceJet& jet) {
    return harmonicity_residual(R, principal_frame_components(jet));
}

double harmonicity_residual(const CurvatureData& R, const InvariantJet& jet) {
    return harmonicity_residual(R, principal_frame_components(jet));
}

double normal_component_residual(const CurvatureData& R, const Eigen::Vector3d& X,
                                 const Eigen::Vector3d& Y, const Eigen::Vector3d& N) {
    Eigen::Matrix3d Q;
    Q << X, Y, N;
    if ((Q.transpose() * Q - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > 1e-10)
        throw invalid_frame_error("normal_component_residual: (X, Y, N) is not orthonormal");
    double worst = 0.0;
    const Eigen::Vector3d* pair[2] = {&X, &Y};
    for (const auto* A : pair)
        for (const auto* B : pair)
            for (const auto* C : pair)
                worst = std::max(worst, std::abs(curvature_component(R.R, *A, *B, *C, N)));
    return worst;
}

std::set<Lemma33Case> lemma33_classify(const SectionalTriple& K, const Eigen::Vector3d& normal,
                                       double tol) {
    if (std::abs(normal.norm() - 1.0) > 1e-10)
        throw invalid_parameter_error("lemma33_classify: normal must be a unit vector");
    const double a = normal(0), b = normal(1), g = normal(2);
    auto zero = [tol](double t) { return std::abs(t) < tol; };
    auto eq = [tol](double x, double y) {
        return std::abs(x - y) < tol * std::max({1.0, std::abs(x), std::abs(y)});
    };
    std::set<Lemma33Case> cases;
    if (zero(a) && zero(b)) cases.insert(Lemma33Case::I);
    if (zero(a) && zero(g)) cases.insert(Lemma33Case::II);
    if (zero(b) && zero(g)) cases.insert(Lemma33Case::III);
    if (zero(a) && eq(K.K12, K.K13)) cases.insert(Lemma33Case::IV);
    if (zero(b) && eq(K.K12, K.K23)) cases.insert(Lemma33Case::V);
    if (zero(g) && eq(K.K13, K.K23)) cases.insert(Lemma33Case::VI);
    if (eq(K.K12, K.K23) && eq(K.K23, K.K13) && eq(K.K12, K.K13))
        cases.insert(Lemma33Case::VII);
    return cases;
}

bool conformality(const SurfaceJet& jet, double tol) {
    return std::abs(jet.h_trace) < tol || jet.umbilic;
}

bool conformality(const InvariantJet& jet, double tol) {
    return std::abs(jet.h_trace) < tol || jet.umbilic;
}

namespace {

template <typename Jet>
GaussDiagnostics diagnose_impl(const CurvatureData& R, const Jet& jet, double tol) {
    GaussDiagnostics d;
    const Eigen::Matrix3d P = principal_components_of(jet);
    std::tie(d.r1213, d.r2123) = vertical_residuals(R, P);
    d.harmonicity_gap = harmonicity_residual(R, P);
    d.lemma32_residual =
        normal_component_residual(R, jet.canonical_components.col(0),
                                  jet.canonical_components.col(1),
                                  jet.canonical_components.col(2));
    d.cases = lemma33_classify(R.sectional(), jet.canonical_components.col(2), tol);
    d.vertical_harmonic = std::abs(d.r1213) < tol && std::abs(d.r2123) < tol;
    d.harmonic =
        d.vertical_harmonic && std::abs(jet.h_trace) < tol && std::abs(d.harmonicity_gap) < tol;
    d.conformal = conformality(jet, tol);
    return d;
}

} // namespace

GaussDiagnostics diagnose(const CurvatureData& R, const SurfaceJet& jet, double tol) {
    return diagnose_impl(R, jet, tol);
}

GaussDiagnostics diagnose(const CurvatureData& R, const InvariantJet& jet, double tol) {
    return diagnose_impl(R, jet, tol);
}

} // namespace liegauss
