#pragma once

/// Independent numerical oracles: coordinate Christoffel symbols and frame
/// curvature by central differences of the metric, and a classical RK4
/// integrator. These never touch the closed-form connection/curvature paths.

#include "liegauss/geometry.hpp"
#include "liegauss/models.hpp"

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace liegauss {

struct FDConfig {
    double h = 1e-5;
    bool richardson = false;
};

/// Coordinate symbols Gamma^k_{ij}, indices 1-based over (x,y,z).
struct CoordChristoffels {
    std::array<double, 27> comps{};
    double operator()(int k, int i, int j) const;
    double& at(int k, int i, int j);
};

/// Throws conditioning_error when the metric condition number exceeds 1e8.
CoordChristoffels fd_christoffels(const CoordModel& model, const CoordPoint& p,
                                  const FDConfig& cfg = {});

/// Frame components of the coordinate curvature tensor at p, contracted
/// against frame_at(p), plus the sectional triple (K12, K23, K13).
struct FrameCurvature {
    RiemannComponents R;
    SectionalTriple sectional;
};

FrameCurvature fd_riemann_frame(const CoordModel& model, const CoordPoint& p,
                                const FDConfig& cfg = {});

/// Classical fixed-step RK4. Returns the path including both endpoints
/// (steps+1 states). Throws invalid_parameter_error for steps < 1.
std::vector<Eigen::VectorXd>
rk4(const std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>& field,
    const Eigen::VectorXd& y0, double t0, double t1, int steps);

} // namespace liegauss
