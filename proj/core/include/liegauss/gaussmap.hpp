#pragma once

/// Curvature-level criteria for harmonicity of the Gauss map of a CMC surface.
/// In a principal frame {eps1, eps2, eps3 = N} the Gauss map is vertically
/// harmonic iff R(eps1,eps2,eps1,eps3) = R(eps2,eps1,eps2,eps3) = 0, and (for
/// minimal surfaces) harmonic iff additionally R(eps3,eps1,eps1,eps3) =
/// R(eps3,eps2,eps2,eps3). Equivalently, vertical harmonicity says the normal
/// component of R(X,Y)Z vanishes for tangent X,Y,Z. The map itself is never
/// materialized; everything is evaluated on curvature components.

#include "liegauss/geometry.hpp"
#include "liegauss/surfaces.hpp"

#include <Eigen/Dense>
#include <set>
#include <utility>

namespace liegauss {

inline constexpr double kGaussTol = 1e-9;

enum class Lemma33Case { I, II, III, IV, V, VI, VII };
const char* to_string(Lemma33Case c);

struct GaussDiagnostics {
    double r1213 = 0.0;
    double r2123 = 0.0;
    double harmonicity_gap = 0.0;   // R(3113) - R(3223) in the principal frame
    double lemma32_residual = 0.0;  // max |<R(X,Y)Z, N>| over tangent-frame triples
    std::set<Lemma33Case> cases;
    bool vertical_harmonic = false;
    bool harmonic = false;
    bool conformal = false;
};

/// Principal frame {eps1, eps2, N} as canonical-frame components (columns).
/// For umbilic jets the Gram-Schmidt tangent basis is kept.
Eigen::Matrix3d principal_frame_components(const SurfaceJet& jet);
Eigen::Matrix3d principal_frame_components(const InvariantJet& jet);

/// (R_1213, R_2123) in the orthonormal frame given by the columns of Q.
std::pair<double, double> vertical_residuals(const CurvatureData& R, const Eigen::Matrix3d& Q);
std::pair<double, double> vertical_residuals(const CurvatureData& R, const SurfaceJet& jet);
std::pair<double, double> vertical_residuals(const CurvatureData& R, const InvariantJet& jet);

/// R_3113 - R_3223 in the principal frame. Meaningful for minimal jets.
double harmonicity_residual(const CurvatureData& R, const Eigen::Matrix3d& Q);
double harmonicity_residual(const CurvatureData& R, const SurfaceJet& jet);
double harmonicity_residual(const CurvatureData& R, const InvariantJet& jet);

/// max over the 8 triples (X,Y,Z) in {X,Y}^3 of |<R(X,Y)Z, N>|.
/// Throws invalid_frame_error unless (X, Y, N) is orthonormal to 1e-10.
double normal_component_residual(const CurvatureData& R, const Eigen::Vector3d& X,
                                 const Eigen::Vector3d& Y, const Eigen::Vector3d& N);

/// Every case of the seven-case normal classification whose conditions hold
/// within tol. K-equalities use |Ka-Kb| < tol*max(1,|Ka|,|Kb|). Throws
/// invalid_parameter_error unless the normal is unit to 1e-10.
std::set<Lemma33Case> lemma33_classify(const SectionalTriple& K, const Eigen::Vector3d& normal,
                                       double tol = kGaussTol);

/// The Gauss map is conformal iff the jet is minimal or totally umbilical.
bool conformality(const SurfaceJet& jet, double tol = kGaussTol);
bool conformality(const InvariantJet& jet, double tol = kGaussTol);

GaussDiagnostics diagnose(const CurvatureData& R, const SurfaceJet& jet, double tol = kGaussTol);
GaussDiagnostics diagnose(const CurvatureData& R, const InvariantJet& jet, double tol = kGaussTol);

} // namespace liegauss
