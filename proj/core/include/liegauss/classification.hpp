#pragma once

/// Theorem-level checkers for the classification of CMC surfaces with
/// vertically harmonic Gauss map, and the explicit constructions in the
/// E(1,1) model. Theorem ids follow the CLI contract:
///   5.1 (SU(2)), 5.2 (SL(2,R)), 5.3 (E(1,1)), 5.4 (E2tilde),
///   4.5 (non-unimodular groups).

#include "liegauss/models.hpp"
#include "liegauss/report.hpp"
#include "liegauss/surfaces.hpp"

#include <string>
#include <vector>

namespace liegauss {

struct TheoremReport {
    std::string theorem;
    std::vector<std::pair<std::string, double>> inputs;
    std::vector<std::pair<std::string, std::string>> notes;
    std::vector<Check> checks;

    bool overall() const;
};

/// Necessity checks for SU(2): the admissibility identity c1 = c2+c3 together
/// with K12 = K13 (both sides evaluated independently), feasibility of the
/// alpha=0 normal case, and minimality forced through the compatibility
/// residual. Requires c1 > c2 > c3 > 0; throws invalid_parameter_error
/// otherwise (coincident constants mean a larger isometry group).
TheoremReport su2_check(double c1, double c2, double c3);

/// Analogous check for SL(2,R): c2 = c1+c3, K12 = K23, e2 tangent.
/// Requires c1 > c2 > 0 > c3.
TheoremReport sl2_check(double c1, double c2, double c3);

/// 3*C*beta*gamma^2*(c3 - c2); vanishing with beta,gamma != 0 and c2 != c3
/// forces C = 0 (minimality).
double compatibility_residual(double C, double beta, double gamma, double c2, double c3);

/// Continuous-branch solution of dtheta/dv = -lambda1^2 cos(2 theta):
/// theta = atan2(E+1, E-1) with E = exp(-2 lambda1^2 v + c).
double theta_solution(double lambda1, double c, double v);

/// p(u,v) = lambda1^2 * u * sin(2 theta).
double p_field(double lambda1, double u, double theta);

/// Explicit minimal surface in the E(1,1) model with l1 = l2 = lambda1:
///   f1 = -u e^{l^2 v}/(l sqrt2) (sin th + cos th) + a1
///   f2 =  u e^{-l^2 v}/(l sqrt2) (sin th - cos th) + a2
///   f3 = l^2 v
/// with analytic derivatives installed.
ImmersedPatch thm53_parametrization(double lambda1, double c, double a1, double a2);

/// Left translation that maps the image of thm53_parametrization into the
/// plane {x = -y}: the group inverse of (a1, a2, c/2), i.e. the point
/// (-a1 e^{-c/2}, -a2 e^{c/2}, -c/2).
CoordPoint thm53_normalizing_translation(double c, double a1, double a2);

/// Residuals of the first-order frame system on an E(1,1) surface whose unit
/// normal lies in span{e1, e2} (alpha = cos theta, beta = sin theta):
///   eq2: beta E2[alpha] - alpha E2[beta] - lambda1^2 (alpha^2 - beta^2)
///   eq3: alpha E1[beta] - beta E1[alpha] - C
///   eq6: E2[theta] + lambda1^2 cos(2 theta)
/// evaluated with numerical directional derivatives along E1 = df^-1(beta e1
/// - alpha e2) and E2 = df^-1(e3). Throws wrong_case_error when the normal at
/// (u,v) has an e3-component beyond 1e-8; neighbor evaluations project.
struct FrameSystemResiduals {
    double eq2 = 0.0;
    double eq3 = 0.0;
    double eq6 = 0.0;
    double max_abs() const;
};

FrameSystemResiduals e11_frame_system_residual(const ImmersedPatch& patch, double u, double v,
                                               double C = 0.0);

/// Invariant-surface case analysis for a non-unimodular group: span{e2,e3} is
/// always integrable with H_norm = 1 and vanishing intrinsic curvature;
/// span{e1,e2} and span{e1,e3} are integrable iff eta = 0 and then totally
/// geodesic. Throws invalid_parameter_error for xi in {0, 1} (within 1e-9).
TheoremReport nonuni_classify(double xi, double eta);

struct TheoremParams {
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;  // 5.1 / 5.2
    double lambda1 = 1.0, lambda2 = 1.0;  // 5.3 / 5.4
    double xi = 0.5, eta = 0.0;           // 4.5
    int grid = 20;                        // parameter-domain samples per axis
};

/// Aggregated per-theorem verification; id in {"5.1","5.2","5.3","5.4","4.5"}.
TheoremReport verify_theorem(const std::string& id, const TheoremParams& params);

/// TheoremReport -> CLI report.
Report to_report(const TheoremReport& tr, const std::string& command);

} // namespace liegauss
