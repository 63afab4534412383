#include "liegauss/surfaces.hpp"

#include "liegauss/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <utility>

namespace liegauss {

ImmersedPatch::ImmersedPatch(CoordModel model, Map f)
    : model_(std::move(model)), f_(std::move(f)) {}

ImmersedPatch::ImmersedPatch(CoordModel model, Map f, Jacobian df)
    : model_(std::move(model)), f_(std::move(f)), df_(std::move(df)) {}

std::array<Eigen::Vector3d, 2> ImmersedPatch::derivatives(double u, double v) const {
    if (df_) return df_(u, v);
    const double h = fd_step;
    const Eigen::Vector3d fu = (f_(u + h, v).vec() - f_(u - h, v).vec()) / (2.0 * h);
    const Eigen::Vector3d fv = (f_(u, v + h).vec() - f_(u, v - h).vec()) / (2.0 * h);
    return {fu, fv};
}

std::array<Eigen::Vector3d, 3> ImmersedPatch::second_derivatives(double u, double v) const {
    if (df_) {
        const double h = fd_step;
        const auto dp_u = df_(u + h, v), dm_u = df_(u - h, v);
        const auto dp_v = df_(u, v + h), dm_v = df_(u, v - h);
        return {(dp_u[0] - dm_u[0]) / (2.0 * h),
                (dp_v[0] - dm_v[0]) / (2.0 * h),
                (dp_v[1] - dm_v[1]) / (2.0 * h)};
    }
    auto second_at = [&](double h) -> std::array<Eigen::Vector3d, 3> {
        const Eigen::Vector3d c = f_(u, v).vec();
        const Eigen::Vector3d fuu =
            (f_(u + h, v).vec() - 2.0 * c + f_(u - h, v).vec()) / (h * h);
        const Eigen::Vector3d fvv =
            (f_(u, v + h).vec() - 2.0 * c + f_(u, v - h).vec()) / (h * h);
        const Eigen::Vector3d fuv = (f_(u + h, v + h).vec() - f_(u + h, v - h).vec() -
                                     f_(u - h, v + h).vec() + f_(u - h, v - h).vec()) /
                                    (4.0 * h * h);
        return {fuu, fuv, fvv};
    };
    // Richardson on the plain second differences.
    const auto a = second_at(fd_step);
    const auto b = second_at(fd_step / 2.0);
    return {(4.0 * b[0] - a[0]) / 3.0, (4.0 * b[1] - a[1]) / 3.0, (4.0 * b[2] - a[2]) / 3.0};
}

namespace {

struct TangentBasis {
    Eigen::Vector3d T1, T2, N;
    Eigen::Vector2d A1, A2;  // parameter coefficients: T1 = A1_u du + A1_v dv, etc.
};

TangentBasis orthonormal_basis(const Eigen::Matrix3d& g, const Eigen::Vector3d& fu,
                               const Eigen::Vector3d& fv) {
    TangentBasis tb;
    const double nu = std::sqrt(fu.dot(g * fu));
    tb.T1 = fu / nu;
    tb.A1 = {1.0 / nu, 0.0};
    const double proj = fv.dot(g * tb.T1);
    const Eigen::Vector3d w = fv - proj * tb.T1;
    const double nw = std::sqrt(w.dot(g * w));
    tb.T2 = w / nw;
    tb.A2 = {-proj / (nu * nw), 1.0 / nw};
    // g^-1 (fu x fv) is g-orthogonal to the tangent plane and positively
    // oriented against (fu, fv) by construction.
    const Eigen::Vector3d nr = g.ldlt().solve(fu.cross(fv));
    tb.N = nr / std::sqrt(nr.dot(g * nr));
    return tb;
}

Eigen::Vector3d unit_normal_at(const ImmersedPatch& patch, double u, double v) {
    const auto d = patch.derivatives(u, v);
    const Eigen::Matrix3d g = patch.model().metric_at(patch.at(u, v));
    const Eigen::Vector3d nr = g.ldlt().solve(d[0].cross(d[1]));
    return nr / std::sqrt(nr.dot(g * nr));
}

} // namespace

SurfaceJet surface_jet(const ImmersedPatch& patch, double u, double v) {
    const CoordModel& model = patch.model();
    const CoordPoint p = patch.at(u, v);
    const Eigen::Matrix3d g = model.metric_at(p);
    const auto d = patch.derivatives(u, v);
    const Eigen::Vector3d fu = d[0], fv = d[1];

    Eigen::Matrix<double, 3, 2> J;
    J.col(0) = fu;
    J.col(1) = fv;
    const Eigen::JacobiSVD<Eigen::Matrix<double, 3, 2>> svd(J);
    if (svd.singularValues()(1) < 1e-8)
        throw degenerate_immersion_error("surface_jet: df has rank < 2 at the evaluated point");

    SurfaceJet jet;
    jet.point = p;
    jet.first_ff << fu.dot(g * fu), fu.dot(g * fv), fu.dot(g * fv), fv.dot(g * fv);

    const TangentBasis tb = orthonormal_basis(g, fu, fv);
    jet.tangent1 = tb.T1;
    jet.tangent2 = tb.T2;
    jet.normal = tb.N;

    // Shape operator S_ab = -<nabla_{T_a} N, T_b> with the ambient covariant
    // derivative assembled from coordinate Christoffels and the directional
    // derivative of the unit-normal field in parameter space. The metric is
    // closed form, so a coarse Richardson step gives the symbols near machine
    // accuracy; the patch step only drives the normal-field differences.
    const double h = patch.fd_step;
    const CoordChristoffels Gam = fd_christoffels(model, p, FDConfig{1e-3, true});
    const Eigen::Vector3d dNdu =
        (unit_normal_at(patch, u + h, v) - unit_normal_at(patch, u - h, v)) / (2.0 * h);
    const Eigen::Vector3d dNdv =
        (unit_normal_at(patch, u, v + h) - unit_normal_at(patch, u, v - h)) / (2.0 * h);

    auto covariant_N = [&](const Eigen::Vector2d& A, const Eigen::Vector3d& T) {
        Eigen::Vector3d dN = A(0) * dNdu + A(1) * dNdv;
        for (int k = 1; k <= 3; ++k) {
            double acc = 0.0;
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) acc += Gam(k, i, j) * T(i - 1) * tb.N(j - 1);
            dN(k - 1) += acc;
        }
        return dN;
    };
    const Eigen::Vector3d covN1 = covariant_N(tb.A1, tb.T1);
    const Eigen::Vector3d covN2 = covariant_N(tb.A2, tb.T2);
    jet.shape << -covN1.dot(g * tb.T1), -covN1.dot(g * tb.T2), -covN2.dot(g * tb.T1),
        -covN2.dot(g * tb.T2);
    jet.shape_symmetry_residual = std::abs(jet.shape(0, 1) - jet.shape(1, 0));
    jet.h_trace = jet.shape.trace();
    jet.h_norm = 0.5 * jet.h_trace;

    const PrincipalFrame pf = principal_frame(jet.shape);
    jet.principal_curvatures = pf.kappa;
    jet.principal_directions = pf.basis;
    jet.umbilic = pf.umbilic;

    const Eigen::Matrix3d F = model.frame_at(p);
    jet.canonical_components.col(0) = F.transpose() * g * tb.T1;
    jet.canonical_components.col(1) = F.transpose() * g * tb.T2;
    jet.canonical_components.col(2) = F.transpose() * g * tb.N;
    return jet;
}

InvariantJet invariant_surface_jet(const FrameSurfaceSpec& spec) {
    const int t1 = spec.tangent[0], t2 = spec.tangent[1], n = spec.normal;
    std::array<bool, 4> seen{};
    for (int i : {t1, t2, n}) {
        if (i < 1 || i > 3 || seen[i])
            throw invalid_parameter_error(
                "invariant_surface_jet: indices must form a permutation of {1,2,3}");
        seen[i] = true;
    }

    auto basis = [](int i) {
        Eigen::Vector3d e = Eigen::Vector3d::Zero();
        e(i - 1) = 1.0;
        return e;
    };

    InvariantJet jet;
    jet.integrability_residual =
        std::abs(bracket(spec.group, basis(t1), basis(t2))(n - 1));
    jet.integrable = jet.integrability_residual < 1e-12;

    const ConnectionTable G = levi_civita(spec.group);
    // S e_a = -(nabla_{e_a} e_n)^tangential
    jet.shape << -G(t1, n, t1), -G(t1, n, t2), -G(t2, n, t1), -G(t2, n, t2);
    jet.h_trace = jet.shape.trace();
    jet.h_norm = 0.5 * jet.h_trace;

    const PrincipalFrame pf = principal_frame(jet.shape);
    jet.principal_curvatures = pf.kappa;
    jet.principal_directions = pf.basis;
    jet.umbilic = pf.umbilic;

    jet.canonical_components.col(0) = basis(t1);
    jet.canonical_components.col(1) = basis(t2);
    jet.canonical_components.col(2) = basis(n);
    return jet;
}

double gauss_curvature(const SurfaceJet& jet, double K_tangent_plane) {
    return K_tangent_plane + jet.shape.determinant();
}

double gauss_curvature(const InvariantJet& jet, double K_tangent_plane) {
    return K_tangent_plane + jet.shape.determinant();
}

PrincipalFrame principal_frame(const Eigen::Matrix2d& shape, double tol) {
    const Eigen::Matrix2d sym = 0.5 * (shape + shape.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(sym);
    PrincipalFrame pf;
    pf.kappa = es.eigenvalues();
    const double scale = std::max({1.0, std::abs(pf.kappa(0)), std::abs(pf.kappa(1))});
    pf.umbilic = std::abs(pf.kappa(1) - pf.kappa(0)) < tol * scale;
    if (pf.umbilic) {
        pf.basis = Eigen::Matrix2d::Identity();
        return pf;
    }
    pf.basis = es.eigenvectors();
    if (pf.basis.determinant() < 0.0) pf.basis.col(1) *= -1.0;
    return pf;
}

PrincipalFrame principal_frame(const SurfaceJet& jet) { return principal_frame(jet.shape); }

} // namespace liegauss
