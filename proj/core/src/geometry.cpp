#include "liegauss/geometry.hpp"

#include "liegauss/errors.hpp"

#include <cmath>

namespace liegauss {

namespace {

inline int idx3(int i, int j, int k) { return ((i - 1) * 3 + (j - 1)) * 3 + (k - 1); }
inline int idx4(int i, int j, int k, int l) {
    return (((i - 1) * 3 + (j - 1)) * 3 + (k - 1)) * 3 + (l - 1);
}

Eigen::Vector3d basis(int i) {
    Eigen::Vector3d e = Eigen::Vector3d::Zero();
    e(i - 1) = 1.0;
    return e;
}

} // namespace

double ConnectionTable::operator()(int i, int j, int k) const { return coeffs[idx3(i, j, k)]; }
double& ConnectionTable::at(int i, int j, int k) { return coeffs[idx3(i, j, k)]; }

Eigen::Vector3d ConnectionTable::covariant(int i, int j) const {
    return {(*this)(i, j, 1), (*this)(i, j, 2), (*this)(i, j, 3)};
}

double RiemannComponents::operator()(int i, int j, int k, int l) const {
    return comps[idx4(i, j, k, l)];
}
double& RiemannComponents::at(int i, int j, int k, int l) { return comps[idx4(i, j, k, l)]; }

ConnectionTable levi_civita(const GroupSpec& spec) {
    ConnectionTable t;
    if (spec.is_unimodular()) {
        const auto [m1, m2, m3] = mu_constants(spec.unimodular_spec());
        t.at(1, 2, 3) = m1;
        t.at(1, 3, 2) = -m1;
        t.at(2, 1, 3) = -m2;
        t.at(2, 3, 1) = m2;
        t.at(3, 1, 2) = m3;
        t.at(3, 2, 1) = -m3;
        return t;
    }
    const auto& n = spec.nonunimodular_spec();
    const double xi = n.xi, eta = n.eta;
    t.at(1, 2, 3) = eta;
    t.at(1, 3, 2) = -eta;
    t.at(2, 1, 2) = -(1.0 + xi);
    t.at(2, 1, 3) = -xi * eta;
    t.at(2, 2, 1) = 1.0 + xi;
    t.at(2, 3, 1) = xi * eta;
    t.at(3, 1, 2) = -xi * eta;
    t.at(3, 1, 3) = -(1.0 - xi);
    t.at(3, 2, 1) = xi * eta;
    t.at(3, 3, 1) = 1.0 - xi;
    return t;
}

ConnectionTable koszul_connection(const GroupSpec& spec) {
    // Left-invariant fields have constant inner products, so only the bracket
    // terms of the Koszul formula survive. Orthonormal frame: inner products
    // are plain components.
    ConnectionTable t;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            const Eigen::Vector3d bij = bracket(spec, basis(i), basis(j));
            for (int k = 1; k <= 3; ++k) {
                const Eigen::Vector3d bjk = bracket(spec, basis(j), basis(k));
                const Eigen::Vector3d bki = bracket(spec, basis(k), basis(i));
                t.at(i, j, k) = 0.5 * (bij(k - 1) - bjk(i - 1) + bki(j - 1));
            }
        }
    }
    return t;
}

CurvatureData riemann_tensor(const GroupSpec& spec) {
    const ConnectionTable G = levi_civita(spec);
    // Structure constants C[i][j] = [e_i, e_j] as component vectors.
    Eigen::Vector3d C[4][4];
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) C[i][j] = bracket(spec, basis(i), basis(j));

    CurvatureData data;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                for (int l = 1; l <= 3; ++l) {
                    double r = 0.0;
                    for (int m = 1; m <= 3; ++m)
                        r += G(j, k, m) * G(i, m, l) - G(i, k, m) * G(j, m, l) -
                             C[i][j](m - 1) * G(m, k, l);
                    data.R.at(i, j, k, l) = r;
                }

    data.K12 = data.R(1, 2, 2, 1);
    data.K23 = data.R(2, 3, 3, 2);
    data.K13 = data.R(1, 3, 3, 1);
    for (int a = 1; a <= 3; ++a) {
        double ric = 0.0;
        for (int i = 1; i <= 3; ++i) ric += data.R(i, a, a, i);
        data.ricci(a - 1) = ric;
    }
    return data;
}

SectionalTriple sectional_closed_form(const GroupSpec& spec) {
    if (spec.is_unimodular()) {
        const auto& u = spec.unimodular_spec();
        const auto [m1, m2, m3] = mu_constants(u);
        return {u.c3 * m3 - m1 * m2, u.c1 * m1 - m2 * m3, u.c2 * m2 - m1 * m3};
    }
    const auto& n = spec.nonunimodular_spec();
    const double xi = n.xi, eta2 = n.eta * n.eta;
    return {-(xi * eta2 + (1.0 + xi) * (1.0 + xi) + xi * eta2 * (1.0 + xi)),
            xi * xi * (1.0 + eta2) - 1.0,
            xi * eta2 - (1.0 - xi) * (1.0 - xi) + xi * eta2 * (1.0 - xi)};
}

RiemannComponents frame_change(const CurvatureData& data, const Eigen::Matrix3d& Q) {
    if ((Q.transpose() * Q - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > 1e-12)
        throw invalid_frame_error("frame_change: Q is not orthonormal");
    RiemannComponents out;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                for (int d = 1; d <= 3; ++d)
                    out.at(a, b, c, d) = curvature_component(data.R, Q.col(a - 1), Q.col(b - 1),
                                                             Q.col(c - 1), Q.col(d - 1));
    return out;
}

double curvature_component(const RiemannComponents& R, const Eigen::Vector3d& X,
                           const Eigen::Vector3d& Y, const Eigen::Vector3d& Z,
                           const Eigen::Vector3d& W) {
    double acc = 0.0;
    for (int i = 1; i <= 3; ++i) {
        if (X(i - 1) == 0.0) continue;
        for (int j = 1; j <= 3; ++j) {
            if (Y(j - 1) == 0.0) continue;
            const double xy = X(i - 1) * Y(j - 1);
            for (int k = 1; k <= 3; ++k) {
                if (Z(k - 1) == 0.0) continue;
                const double xyz = xy * Z(k - 1);
                for (int l = 1; l <= 3; ++l) acc += xyz * W(l - 1) * R(i, j, k, l);
            }
        }
    }
    return acc;
}

double sectional_of_plane(const RiemannComponents& R, const Eigen::Vector3d& X,
                          const Eigen::Vector3d& Y) {
    return curvature_component(R, X, Y, Y, X);
}

} // namespace liegauss
