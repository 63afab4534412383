#include "liegauss/catalog.hpp"

#include "liegauss/errors.hpp"

namespace liegauss {

std::vector<std::string> catalog_ids() {
    return {"thm53-i", "thm53-ii", "thm54", "nonuni-e23", "nonuni-e12", "nonuni-e13"};
}

bool is_catalog_patch_id(const std::string& id) {
    return id == "thm53-i" || id == "thm53-ii" || id == "thm54";
}

bool is_catalog_frame_id(const std::string& id) {
    return id == "nonuni-e23" || id == "nonuni-e12" || id == "nonuni-e13";
}

ImmersedPatch catalog_patch(const std::string& id, double lambda1, double lambda2) {
    if (id == "thm53-i") {
        return ImmersedPatch(
            e11_model(lambda1, lambda2),
            [](double u, double v) { return CoordPoint{u, v, 0.0}; },
            [](double, double) {
                return std::array<Eigen::Vector3d, 2>{Eigen::Vector3d(1, 0, 0),
                                                      Eigen::Vector3d(0, 1, 0)};
            });
    }
    if (id == "thm53-ii") {
        return ImmersedPatch(
            e11_model(lambda1, lambda2),
            [](double u, double v) { return CoordPoint{u, -u, v}; },
            [](double, double) {
                return std::array<Eigen::Vector3d, 2>{Eigen::Vector3d(1, -1, 0),
                                                      Eigen::Vector3d(0, 0, 1)};
            });
    }
    if (id == "thm54") {
        return ImmersedPatch(
            e2tilde_model(lambda1, lambda2),
            [](double u, double v) { return CoordPoint{u, v, 0.0}; },
            [](double, double) {
                return std::array<Eigen::Vector3d, 2>{Eigen::Vector3d(1, 0, 0),
                                                      Eigen::Vector3d(0, 1, 0)};
            });
    }
    throw invalid_parameter_error("catalog_patch: unknown patch id '" + id + "'");
}

FrameSurfaceSpec catalog_frame_surface(const std::string& id, double xi, double eta) {
    const GroupSpec group = GroupSpec::nonunimodular(xi, eta);
    if (id == "nonuni-e23") return {group, {2, 3}, 1};
    if (id == "nonuni-e12") return {group, {1, 2}, 3};
    if (id == "nonuni-e13") return {group, {1, 3}, 2};
    throw invalid_parameter_error("catalog_frame_surface: unknown frame id '" + id + "'");
}

} // namespace liegauss
