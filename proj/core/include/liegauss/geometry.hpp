#pragma once

/// Levi-Civita connection and Riemann curvature of a left-invariant metric in
/// its canonical orthonormal frame. Everything here is frame-algebraic: the
/// connection coefficients are constants, so curvature reduces to
///   R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
/// evaluated on frame fields. Sectional curvatures follow the convention
/// K12 = <R(e1,e2)e2, e1>. All tensor accessors take 1-based frame indices.

#include "liegauss/algebra.hpp"

#include <Eigen/Dense>
#include <array>

namespace liegauss {

/// Frame coefficients gamma(i,j,k) = <nabla_{e_i} e_j, e_k>.
struct ConnectionTable {
    std::array<double, 27> coeffs{};

    double operator()(int i, int j, int k) const;
    double& at(int i, int j, int k);
    /// Components of nabla_{e_i} e_j in the canonical frame.
    Eigen::Vector3d covariant(int i, int j) const;
};

/// 4-tensor components R(i,j,k,l) = <R(e_i,e_j)e_k, e_l> in some orthonormal frame.
struct RiemannComponents {
    std::array<double, 81> comps{};

    double operator()(int i, int j, int k, int l) const;
    double& at(int i, int j, int k, int l);
};

struct SectionalTriple {
    double K12 = 0.0;
    double K23 = 0.0;
    double K13 = 0.0;
};

struct CurvatureData {
    RiemannComponents R;
    double K12 = 0.0;
    double K23 = 0.0;
    double K13 = 0.0;
    Eigen::Vector3d ricci = Eigen::Vector3d::Zero();

    SectionalTriple sectional() const { return {K12, K23, K13}; }
};

/// Closed-form connection table of the family.
ConnectionTable levi_civita(const GroupSpec& spec);

/// Independent oracle: six-term Koszul formula on left-invariant fields,
/// 2<nabla_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>.
ConnectionTable koszul_connection(const GroupSpec& spec);

/// Full frame curvature tensor, sectional triple and Ricci diagonal.
CurvatureData riemann_tensor(const GroupSpec& spec);

/// Closed-form sectional curvatures of the coordinate planes.
SectionalTriple sectional_closed_form(const GroupSpec& spec);

/// Components of the tensor in the orthonormal frame whose vectors are the
/// columns of Q (expressed in the canonical frame). Throws invalid_frame_error
/// unless Q^T Q = I to 1e-12.
RiemannComponents frame_change(const CurvatureData& data, const Eigen::Matrix3d& Q);

/// <R(X,Y)Z, W> for arbitrary canonical-frame coefficient vectors.
double curvature_component(const RiemannComponents& R,
                           const Eigen::Vector3d& X, const Eigen::Vector3d& Y,
                           const Eigen::Vector3d& Z, const Eigen::Vector3d& W);

/// Sectional curvature of the plane spanned by orthonormal X, Y.
double sectional_of_plane(const RiemannComponents& R,
                          const Eigen::Vector3d& X, const Eigen::Vector3d& Y);

} // namespace liegauss
