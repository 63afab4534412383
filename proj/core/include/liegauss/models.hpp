#pragma once

/// Global coordinate realizations of the two solvable model groups: frame
/// fields, metric tensors and group products on R^3. The third metric
/// parameter is always normalized to lambda3 = 1/(lambda1*lambda2).

#include "liegauss/algebra.hpp"

#include <Eigen/Dense>
#include <optional>
#include <string>

namespace liegauss {

struct CoordPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Eigen::Vector3d vec() const { return {x, y, z}; }
    static CoordPoint from(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }
};

enum class ModelKind { E11, E2tilde };

/// A coordinate model carries the orthonormal left-invariant frame, the metric
/// and the group product. Frames:
///   E11:     e1 = (-e^z dx + e^-z dy)/(l1 sqrt2), e2 = (e^z dx + e^-z dy)/(l2 sqrt2), e3 = dz/l3
///   E2tilde: e1 = (-sin z dx + cos z dy)/l2,      e2 = dz/l3,  e3 = (cos z dx + sin z dy)/l1
class CoordModel {
public:
    CoordModel(ModelKind kind, double lambda1, double lambda2);

    ModelKind kind() const { return kind_; }
    double lambda1() const { return lambda1_; }
    double lambda2() const { return lambda2_; }
    double lambda3() const { return lambda3_; }

    /// Columns are the coordinate components of e1, e2, e3 at p.
    Eigen::Matrix3d frame_at(const CoordPoint& p) const;
    Eigen::Matrix3d metric_at(const CoordPoint& p) const;
    CoordPoint product(const CoordPoint& p, const CoordPoint& q) const;

    /// Structure constants of the frame: E11 -> (l1^2, -l2^2, 0),
    /// E2tilde -> (l2^2, 0, l1^2).
    UnimodularSpec implied_spec() const;
    GroupSpec group_spec() const { return GroupSpec::unimodular(implied_spec()); }

    /// Set when the parameters fall outside the normalized range of the
    /// family; the formulas stay valid, so this is advisory only.
    const std::optional<std::string>& range_warning() const { return range_warning_; }

private:
    ModelKind kind_;
    double lambda1_, lambda2_, lambda3_;
    std::optional<std::string> range_warning_;
};

/// Throws invalid_parameter_error for non-positive lambda; warns (does not
/// throw) when lambda1 < lambda2.
CoordModel e11_model(double lambda1, double lambda2);

/// Throws invalid_parameter_error for non-positive lambda; warns when the
/// pair is outside {lambda1 > lambda2} and {lambda1 = lambda2 = 1}.
CoordModel e2tilde_model(double lambda1, double lambda2);

CoordPoint group_product(const CoordModel& model, const CoordPoint& p, const CoordPoint& q);

/// L_a(p) = product(a, p).
CoordPoint left_translation(const CoordModel& model, const CoordPoint& a, const CoordPoint& p);

} // namespace liegauss
