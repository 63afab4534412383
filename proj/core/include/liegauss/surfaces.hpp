#pragma once

/// Pointwise surface data (jets) for parametrized patches in the coordinate
/// models and for invariant frame distributions in abstract groups: first and
/// second fundamental forms, shape operator, mean curvature and principal
/// frames.
///
/// Conventions: the orthonormal tangent basis (T1, T2) is Gram-Schmidt of
/// (df/du, df/dv) under the ambient metric; the unit normal N completes
/// (T1, T2, N) positively oriented with respect to the coordinate orientation;
/// the shape operator is S X = -(nabla_X N)^tangential, so the mean curvature
/// carries the sign induced by that orientation. Both the trace and the
/// normalized trace are exposed (the classification results state H as the
/// normalized value).

#include "liegauss/algebra.hpp"
#include "liegauss/geometry.hpp"
#include "liegauss/models.hpp"
#include "liegauss/oracle.hpp"

#include <Eigen/Dense>
#include <array>
#include <functional>

namespace liegauss {

/// Parametrized surface patch into a coordinate model. Derivatives are
/// analytic when supplied, otherwise central differences with step fd_step.
class ImmersedPatch {
public:
    using Map = std::function<CoordPoint(double, double)>;
    // (df/du, df/dv) as coordinate vectors
    using Jacobian = std::function<std::array<Eigen::Vector3d, 2>(double, double)>;

    ImmersedPatch(CoordModel model, Map f);
    ImmersedPatch(CoordModel model, Map f, Jacobian df);

    const CoordModel& model() const { return model_; }
    CoordPoint at(double u, double v) const { return f_(u, v); }
    std::array<Eigen::Vector3d, 2> derivatives(double u, double v) const;
    /// (f_uu, f_uv, f_vv); finite differences with Richardson extrapolation
    /// when no analytic Jacobian is available.
    std::array<Eigen::Vector3d, 3> second_derivatives(double u, double v) const;
    bool has_analytic_derivatives() const { return static_cast<bool>(df_); }

    double fd_step = 1e-5;

private:
    CoordModel model_;
    Map f_;
    Jacobian df_;
};

struct SurfaceJet {
    CoordPoint point;
    Eigen::Vector3d tangent1, tangent2, normal;  // coordinate components
    Eigen::Matrix2d first_ff;                    // wrt (df/du, df/dv)
    Eigen::Matrix2d shape;                       // wrt (T1, T2); raw, not symmetrized
    double shape_symmetry_residual = 0.0;        // |S12 - S21|, consistency check
    double h_trace = 0.0;
    double h_norm = 0.0;
    Eigen::Vector2d principal_curvatures;        // ascending
    Eigen::Matrix2d principal_directions;        // columns, in the (T1, T2) basis
    bool umbilic = false;
    /// Columns: components of T1, T2, N in the canonical left-invariant frame.
    Eigen::Matrix3d canonical_components;
};

/// Throws degenerate_immersion_error when df drops rank (second singular
/// value below 1e-8).
SurfaceJet surface_jet(const ImmersedPatch& patch, double u, double v);

/// Invariant distribution span{e_t1, e_t2} with unit normal +e_n.
struct FrameSurfaceSpec {
    GroupSpec group;
    std::array<int, 2> tangent{1, 2};  // 1-based frame indices
    int normal = 3;
};

struct InvariantJet {
    bool integrable = false;
    double integrability_residual = 0.0;  // |<[e_t1, e_t2], e_n>|
    Eigen::Matrix2d shape;                // wrt (e_t1, e_t2); formal if not integrable
    double h_trace = 0.0;
    double h_norm = 0.0;
    Eigen::Vector2d principal_curvatures;
    Eigen::Matrix2d principal_directions;
    bool umbilic = false;
    Eigen::Matrix3d canonical_components;  // columns: e_t1, e_t2, e_n
};

/// Throws invalid_parameter_error unless the indices form a permutation of {1,2,3}.
InvariantJet invariant_surface_jet(const FrameSurfaceSpec& spec);

/// Gauss equation: intrinsic curvature = ambient sectional curvature of the
/// tangent plane + det S.
double gauss_curvature(const SurfaceJet& jet, double K_tangent_plane);
double gauss_curvature(const InvariantJet& jet, double K_tangent_plane);

struct PrincipalFrame {
    Eigen::Matrix2d basis;  // columns, orthonormal, det +1
    Eigen::Vector2d kappa;  // ascending
    bool umbilic = false;
};

/// Orthonormal eigenbasis of the symmetrized 2x2 shape operator. Umbilic
/// points keep the input basis and set the flag.
PrincipalFrame principal_frame(const Eigen::Matrix2d& shape, double tol = 1e-9);
PrincipalFrame principal_frame(const SurfaceJet& jet);

} // namespace liegauss
