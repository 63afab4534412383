#include "liegauss/oracle.hpp"

#include "liegauss/errors.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace liegauss {

namespace {

inline int idxG(int k, int i, int j) { return ((k - 1) * 3 + (i - 1)) * 3 + (j - 1); }

struct MetricDerivatives {
    Eigen::Matrix3d g;
    Eigen::Matrix3d ginv;
    Eigen::Matrix3d dg[3];      // dg[a] = d g / d x_a
    Eigen::Matrix3d d2g[3][3];  // second partials
};

Eigen::Matrix3d metric_shift(const CoordModel& model, const CoordPoint& p, int a, int b,
                             double ha, double hb) {
    Eigen::Vector3d q = p.vec();
    q(a) += ha;
    if (b >= 0) q(b) += hb;
    return model.metric_at(CoordPoint::from(q));
}

MetricDerivatives metric_jets(const CoordModel& model, const CoordPoint& p, double h,
                              bool second) {
    MetricDerivatives md;
    md.g = model.metric_at(p);

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(md.g);
    const double lmin = es.eigenvalues().minCoeff(), lmax = es.eigenvalues().maxCoeff();
    if (!(lmin > 0.0) || lmax / lmin > 1e8)
        throw conditioning_error("metric condition number exceeds 1e8 at the sample point");
    md.ginv = md.g.inverse();

    for (int a = 0; a < 3; ++a)
        md.dg[a] = (metric_shift(model, p, a, -1, h, 0.0) -
                    metric_shift(model, p, a, -1, -h, 0.0)) /
                   (2.0 * h);
    if (second) {
        // Second differences lose eps/h^2 to roundoff, so their step is
        // floored at the error-balanced value for double precision.
        const double h2 = std::max(h, 1e-4);
        for (int a = 0; a < 3; ++a) {
            md.d2g[a][a] = (metric_shift(model, p, a, -1, h2, 0.0) - 2.0 * md.g +
                            metric_shift(model, p, a, -1, -h2, 0.0)) /
                           (h2 * h2);
            for (int b = a + 1; b < 3; ++b) {
                const Eigen::Matrix3d pp = metric_shift(model, p, a, b, h2, h2);
                const Eigen::Matrix3d pm = metric_shift(model, p, a, b, h2, -h2);
                const Eigen::Matrix3d mp = metric_shift(model, p, a, b, -h2, h2);
                const Eigen::Matrix3d mm = metric_shift(model, p, a, b, -h2, -h2);
                md.d2g[a][b] = md.d2g[b][a] = (pp - pm - mp + mm) / (4.0 * h2 * h2);
            }
        }
    }
    return md;
}

CoordChristoffels christoffels_from(const MetricDerivatives& md) {
    CoordChristoffels G;
    for (int k = 1; k <= 3; ++k)
        for (int i = 1; i <= 3; ++i)
            for (int j = i; j <= 3; ++j) {
                double acc = 0.0;
                for (int l = 0; l < 3; ++l)
                    acc += md.ginv(k - 1, l) * (md.dg[i - 1](j - 1, l) + md.dg[j - 1](i - 1, l) -
                                                md.dg[l](i - 1, j - 1));
                G.at(k, i, j) = 0.5 * acc;
                G.at(k, j, i) = G(k, i, j);
            }
    return G;
}

// Frame components of the curvature tensor from one metric-derivative jet.
RiemannComponents riemann_frame_from(const CoordModel& model, const CoordPoint& p,
                                     const MetricDerivatives& md) {
    const CoordChristoffels G = christoffels_from(md);

    // dGamInv[a] = d(g^-1)/dx_a = -g^-1 (dg[a]) g^-1
    Eigen::Matrix3d dginv[3];
    for (int a = 0; a < 3; ++a) dginv[a] = -md.ginv * md.dg[a] * md.ginv;

    // dG[a](k,i,j) = d Gamma^k_{ij} / d x_a
    double dG[3][3][3][3];
    for (int a = 0; a < 3; ++a)
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    double acc = 0.0;
                    for (int l = 0; l < 3; ++l) {
                        acc += dginv[a](k, l) *
                               (md.dg[i](j, l) + md.dg[j](i, l) - md.dg[l](i, j));
                        acc += md.ginv(k, l) * (md.d2g[a][i](j, l) + md.d2g[a][j](i, l) -
                                                md.d2g[a][l](i, j));
                    }
                    dG[a][k][i][j] = 0.5 * acc;
                }

    // Coordinate components: R(dx_a, dx_b) dx_c = Rc[a][b][c][d] dx_d.
    double Rc[3][3][3][3];
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    double acc = dG[a][d][b][c] - dG[b][d][a][c];
                    for (int e = 1; e <= 3; ++e)
                        acc += G(d + 1, a + 1, e) * G(e, b + 1, c + 1) -
                               G(d + 1, b + 1, e) * G(e, a + 1, c + 1);
                    Rc[a][b][c][d] = acc;
                }

    const Eigen::Matrix3d F = model.frame_at(p);
    RiemannComponents out;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                for (int l = 1; l <= 3; ++l) {
                    double acc = 0.0;
                    for (int a = 0; a < 3; ++a)
                        for (int b = 0; b < 3; ++b)
                            for (int c = 0; c < 3; ++c) {
                                const double w = F(a, i - 1) * F(b, j - 1) * F(c, k - 1);
                                if (w == 0.0) continue;
                                for (int d = 0; d < 3; ++d)
                                    acc += w * Rc[a][b][c][d] * md.g.row(d).dot(F.col(l - 1));
                            }
                    out.at(i, j, k, l) = acc;
                }
    return out;
}

} // namespace

double CoordChristoffels::operator()(int k, int i, int j) const { return comps[idxG(k, i, j)]; }
double& CoordChristoffels::at(int k, int i, int j) { return comps[idxG(k, i, j)]; }

CoordChristoffels fd_christoffels(const CoordModel& model, const CoordPoint& p,
                                  const FDConfig& cfg) {
    const auto md = metric_jets(model, p, cfg.h, /*second=*/false);
    CoordChristoffels G = christoffels_from(md);
    if (cfg.richardson) {
        const auto md2 = metric_jets(model, p, cfg.h / 2.0, false);
        const CoordChristoffels G2 = christoffels_from(md2);
        for (size_t n = 0; n < G.comps.size(); ++n)
            G.comps[n] = (4.0 * G2.comps[n] - G.comps[n]) / 3.0;
    }
    return G;
}

FrameCurvature fd_riemann_frame(const CoordModel& model, const CoordPoint& p,
                                const FDConfig& cfg) {
    const auto md = metric_jets(model, p, cfg.h, /*second=*/true);
    RiemannComponents R = riemann_frame_from(model, p, md);
    if (cfg.richardson) {
        const auto md2 = metric_jets(model, p, cfg.h / 2.0, true);
        const RiemannComponents R2 = riemann_frame_from(model, p, md2);
        for (size_t n = 0; n < R.comps.size(); ++n)
            R.comps[n] = (4.0 * R2.comps[n] - R.comps[n]) / 3.0;
    }
    FrameCurvature fc;
    fc.R = R;
    fc.sectional = {R(1, 2, 2, 1), R(2, 3, 3, 2), R(1, 3, 3, 1)};
    return fc;
}

std::vector<Eigen::VectorXd>
rk4(const std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>& field,
    const Eigen::VectorXd& y0, double t0, double t1, int steps) {
    if (steps < 1) throw invalid_parameter_error("rk4: steps must be >= 1");
    std::vector<Eigen::VectorXd> path;
    path.reserve(steps + 1);
    path.push_back(y0);
    const double h = (t1 - t0) / steps;
    Eigen::VectorXd y = y0;
    for (int n = 0; n < steps; ++n) {
        const double t = t0 + n * h;
        const Eigen::VectorXd k1 = field(t, y);
        const Eigen::VectorXd k2 = field(t + 0.5 * h, y + 0.5 * h * k1);
        const Eigen::VectorXd k3 = field(t + 0.5 * h, y + 0.5 * h * k2);
        const Eigen::VectorXd k4 = field(t + h, y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        path.push_back(y);
    }
    return path;
}

} // namespace liegauss
