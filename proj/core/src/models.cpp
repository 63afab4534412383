#include "liegauss/models.hpp"

#include "liegauss/errors.hpp"

#include <cmath>

namespace liegauss {

CoordModel::CoordModel(ModelKind kind, double lambda1, double lambda2)
    : kind_(kind), lambda1_(lambda1), lambda2_(lambda2), lambda3_(1.0 / (lambda1 * lambda2)) {
    if (!(lambda1 > 0.0) || !(lambda2 > 0.0))
        throw invalid_parameter_error("CoordModel: lambda parameters must be positive");
    if (kind == ModelKind::E11) {
        if (lambda1 < lambda2)
            range_warning_ = "lambda1 < lambda2: outside the normalized range lambda1 >= lambda2";
    } else {
        const bool normalized = lambda1 > lambda2 || (lambda1 == 1.0 && lambda2 == 1.0);
        if (!normalized)
            range_warning_ =
                "outside the normalized range lambda1 > lambda2 (or lambda1 = lambda2 = 1)";
    }
}

Eigen::Matrix3d CoordModel::frame_at(const CoordPoint& p) const {
    Eigen::Matrix3d F;
    if (kind_ == ModelKind::E11) {
        const double ez = std::exp(p.z), emz = std::exp(-p.z);
        const double s2 = std::sqrt(2.0);
        F.col(0) = Eigen::Vector3d(-ez, emz, 0.0) / (lambda1_ * s2);
        F.col(1) = Eigen::Vector3d(ez, emz, 0.0) / (lambda2_ * s2);
        F.col(2) = Eigen::Vector3d(0.0, 0.0, 1.0 / lambda3_);
    } else {
        const double cz = std::cos(p.z), sz = std::sin(p.z);
        F.col(0) = Eigen::Vector3d(-sz, cz, 0.0) / lambda2_;
        F.col(1) = Eigen::Vector3d(0.0, 0.0, 1.0 / lambda3_);
        F.col(2) = Eigen::Vector3d(cz, sz, 0.0) / lambda1_;
    }
    return F;
}

Eigen::Matrix3d CoordModel::metric_at(const CoordPoint& p) const {
    Eigen::Matrix3d g = Eigen::Matrix3d::Zero();
    const double l1s = lambda1_ * lambda1_, l2s = lambda2_ * lambda2_;
    if (kind_ == ModelKind::E11) {
        const double s = 0.5 * (l1s + l2s);
        g(0, 0) = s * std::exp(-2.0 * p.z);
        g(1, 1) = s * std::exp(2.0 * p.z);
        g(0, 1) = g(1, 0) = 0.5 * (l2s - l1s);
    } else {
        const double cz = std::cos(p.z), sz = std::sin(p.z);
        g(0, 0) = l1s * cz * cz + l2s * sz * sz;
        g(1, 1) = l1s * sz * sz + l2s * cz * cz;
        g(0, 1) = g(1, 0) = (l1s - l2s) * cz * sz;
    }
    g(2, 2) = lambda3_ * lambda3_;
    return g;
}

CoordPoint CoordModel::product(const CoordPoint& p, const CoordPoint& q) const {
    if (kind_ == ModelKind::E11)
        return {p.x + std::exp(p.z) * q.x, p.y + std::exp(-p.z) * q.y, p.z + q.z};
    const double cz = std::cos(p.z), sz = std::sin(p.z);
    return {p.x + q.x * cz - q.y * sz, p.y + q.x * sz + q.y * cz, p.z + q.z};
}

UnimodularSpec CoordModel::implied_spec() const {
    const double l1s = lambda1_ * lambda1_, l2s = lambda2_ * lambda2_;
    if (kind_ == ModelKind::E11) return {l1s, -l2s, 0.0};
    return {l2s, 0.0, l1s};
}

CoordModel e11_model(double lambda1, double lambda2) {
    return CoordModel(ModelKind::E11, lambda1, lambda2);
}

CoordModel e2tilde_model(double lambda1, double lambda2) {
    return CoordModel(ModelKind::E2tilde, lambda1, lambda2);
}

CoordPoint group_product(const CoordModel& model, const CoordPoint& p, const CoordPoint& q) {
    return model.product(p, q);
}

CoordPoint left_translation(const CoordModel& model, const CoordPoint& a, const CoordPoint& p) {
    return model.product(a, p);
}

} // namespace liegauss
