#include <doctest.h>

#include "liegauss/catalog.hpp"
#include "liegauss/classification.hpp"
#include "liegauss/errors.hpp"
#include "liegauss/gaussmap.hpp"
#include "liegauss/oracle.hpp"

#include <cmath>
#include <random>

using namespace liegauss;

TEST_SUITE("classification") {

TEST_CASE("su2_check") {
    SUBCASE("(3,2,1) is admissible with K12 = K13 = 2, K23 = -2") {
        const TheoremReport rep = su2_check(3, 2, 1);
        CHECK(rep.overall());
        const SectionalTriple K = sectional_closed_form(GroupSpec::unimodular(3, 2, 1));
        CHECK(K.K12 == doctest::Approx(2).epsilon(1e-14));
        CHECK(K.K13 == doctest::Approx(2).epsilon(1e-14));
        CHECK(K.K23 == doctest::Approx(-2).epsilon(1e-14));
    }
    SUBCASE("(4,2,1) fails admissibility") {
        const TheoremReport rep = su2_check(4, 2, 1);
        CHECK(!rep.overall());
        const SectionalTriple K = sectional_closed_form(GroupSpec::unimodular(4, 2, 1));
        CHECK(std::abs(K.K12 - K.K13) > 1e-3);
    }
    SUBCASE("coincident or unordered constants are rejected") {
        CHECK_THROWS_AS(su2_check(2, 2, 2), invalid_parameter_error);
        CHECK_THROWS_AS(su2_check(1, 2, 3), invalid_parameter_error);
        CHECK_THROWS_AS(su2_check(3, 2, -1), invalid_parameter_error);
    }
}

TEST_CASE("sl2_check") {
    SUBCASE("(3,1,-2) is admissible with K12 = K23 = -6, K13 = 6") {
        const TheoremReport rep = sl2_check(3, 1, -2);
        CHECK(rep.overall());
        const SectionalTriple K = sectional_closed_form(GroupSpec::unimodular(3, 1, -2));
        CHECK(K.K12 == doctest::Approx(-6).epsilon(1e-14));
        CHECK(K.K23 == doctest::Approx(-6).epsilon(1e-14));
        CHECK(K.K13 == doctest::Approx(6).epsilon(1e-14));
    }
    SUBCASE("(3,2,-2) fails admissibility") { CHECK(!sl2_check(3, 2, -2).overall()); }
    SUBCASE("c1 = c2 is rejected") {
        CHECK_THROWS_AS(sl2_check(2, 2, -1), invalid_parameter_error);
        CHECK_THROWS_AS(sl2_check(1, 2, -1), invalid_parameter_error);
        CHECK_THROWS_AS(sl2_check(2, 1, 1), invalid_parameter_error);
    }
}

TEST_CASE("equality bridge between constants and curvatures") {
    // c1 > c2 > c3 > 0: |c1-c2-c3| < 1e-12 iff |K12-K13| < 1e-10 (identity
    // K12-K13 = (c2-c3)(c2+c3-c1)); analogous statement with K23 for the
    // ordering c1 > c2 > 0 > c3.
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> d(0.1, 3.0);
    int admissible_seen = 0;
    for (int t = 0; t < 1000; ++t) {
        double c2 = d(rng), c3 = d(rng);
        if (c2 < c3) std::swap(c2, c3);
        c2 += 0.01;  // enforce a gap so residuals cannot straddle the thresholds
        const bool make_admissible = t % 2 == 0;
        const double c1 = make_admissible ? c2 + c3 : c2 + c3 + 0.01 + d(rng);
        const SectionalTriple K = sectional_closed_form(GroupSpec::unimodular(c1, c2, c3));
        const bool lhs = std::abs(c1 - c2 - c3) < 1e-12;
        const bool rhs = std::abs(K.K12 - K.K13) < 1e-10;
        CHECK(lhs == rhs);
        admissible_seen += lhs;
    }
    CHECK(admissible_seen == 500);

    for (int t = 0; t < 1000; ++t) {
        double c1 = d(rng) + 0.02, c3 = -d(rng);
        const bool make_admissible = t % 2 == 0;
        const double c2 = make_admissible ? c1 + c3 : c1 + c3 + 0.01 + d(rng);
        if (!(c2 > 0.0) || !(c1 > c2)) continue;
        const SectionalTriple K = sectional_closed_form(GroupSpec::unimodular(c1, c2, c3));
        CHECK((std::abs(c2 - c1 - c3) < 1e-12) == (std::abs(K.K12 - K.K23) < 1e-10));
    }
}

TEST_CASE("compatibility_residual") {
    CHECK(compatibility_residual(0, 0.6, 0.8, 2, 1) == 0.0);
    CHECK(compatibility_residual(1, 0.6, 0.8, 2, 1) == doctest::Approx(-1.152).epsilon(1e-14));
    CHECK(compatibility_residual(5, 0.6, 0.8, 2, 2) == 0.0);
    // linear in C, so the only root with beta,gamma != 0 and c2 != c3 is C = 0
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int t = 0; t < 100; ++t) {
        const double b = d(rng), g = d(rng), c2 = d(rng), c3 = d(rng), C = d(rng);
        const double slope = compatibility_residual(1.0, b, g, c2, c3);
        CHECK(std::abs(compatibility_residual(C, b, g, c2, c3) - C * slope) <= 1e-13);
    }
}

TEST_CASE("theta_solution") {
    CHECK(theta_solution(1, 0, 0) == doctest::Approx(M_PI / 2).epsilon(1e-15));
    // v -> +inf approaches 3pi/4 where cos(2 theta) = 0 (stationary branch value)
    CHECK(theta_solution(1, 0, 60) == doctest::Approx(3 * M_PI / 4).epsilon(1e-12));
    CHECK(std::cos(2 * theta_solution(1, 0, 60)) == doctest::Approx(0).epsilon(1e-12));
    // v -> -inf approaches pi/4; the branch is continuous across E = 1
    CHECK(theta_solution(1, 0, -60) == doctest::Approx(M_PI / 4).epsilon(1e-12));

    SUBCASE("satisfies the angle equation for random parameters") {
        std::mt19937_64 rng(53);
        std::uniform_real_distribution<double> dl(0.4, 1.5), dc(-2.0, 2.0), dv(-3.0, 3.0);
        for (int t = 0; t < 50; ++t) {
            const double l = dl(rng), c = dc(rng);
            const double h = 1e-6;
            for (int s = 0; s < 20; ++s) {
                const double v = dv(rng);
                const double lhs =
                    (theta_solution(l, c, v + h) - theta_solution(l, c, v - h)) / (2 * h);
                CHECK(std::abs(lhs + l * l * std::cos(2 * theta_solution(l, c, v))) <= 1e-8);
            }
        }
    }
    SUBCASE("matches the RK4 oracle on [0,3]") {
        std::mt19937_64 rng(54);
        std::uniform_real_distribution<double> dl(0.4, 1.5), dc(-2.0, 2.0);
        for (int t = 0; t < 50; ++t) {
            const double l = dl(rng), c = dc(rng), m = l * l;
            const int steps = 3000;
            const auto path = rk4(
                [m](double, const Eigen::VectorXd& y) {
                    return Eigen::VectorXd::Constant(1, -m * std::cos(2 * y(0)));
                },
                Eigen::VectorXd::Constant(1, theta_solution(l, c, 0)), 0, 3, steps);
            for (int k = 0; k <= steps; k += 100)
                CHECK(std::abs(path[k](0) - theta_solution(l, c, 3.0 * k / steps)) <= 1e-8);
        }
    }
}

TEST_CASE("p_field") {
    CHECK(p_field(1.3, 0, 0.7) == 0.0);
    CHECK(p_field(1.3, 2.0, M_PI / 2) == doctest::Approx(0).epsilon(1e-12));
    CHECK(p_field(1, 2, M_PI / 4) == doctest::Approx(2).epsilon(1e-14));
}

TEST_CASE("thm53_parametrization satisfies the frame equations") {
    for (auto [l, c, a1, a2] : std::initializer_list<std::array<double, 4>>{
             {1.0, 0.0, 0.0, 0.0}, {1.2, 0.7, 0.3, -0.2}}) {
        const ImmersedPatch patch = thm53_parametrization(l, c, a1, a2);
        const CoordModel& model = patch.model();
        const double h = 1e-6;
        double worst = 0.0;
        for (int a = 0; a < 20; ++a)
            for (int b = 0; b < 20; ++b) {
                const double u = -2.0 + 4.0 * a / 19.0, v = -2.0 + 4.0 * b / 19.0;
                const Eigen::Vector3d fu =
                    (patch.at(u + h, v).vec() - patch.at(u - h, v).vec()) / (2 * h);
                const Eigen::Vector3d fv =
                    (patch.at(u, v + h).vec() - patch.at(u, v - h).vec()) / (2 * h);
                const double th = theta_solution(l, c, v);
                const Eigen::Matrix3d F = model.frame_at(patch.at(u, v));
                const Eigen::Vector3d dfE1 = std::sin(th) * F.col(0) - std::cos(th) * F.col(1);
                const Eigen::Vector3d rhs = p_field(l, u, th) * dfE1 + F.col(2);
                worst = std::max({worst, (fu - dfE1).cwiseAbs().maxCoeff(),
                                  (fv - rhs).cwiseAbs().maxCoeff()});
            }
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("thm53_parametrization is minimal") {
    const ImmersedPatch patch = thm53_parametrization(1, 0, 0, 0);
    double worst = 0.0;
    for (double u : {-2.0, -0.5, 1.0, 2.0})
        for (double v : {-2.0, -0.5, 1.0, 2.0})
            worst = std::max(worst, std::abs(surface_jet(patch, u, v).h_trace));
    CHECK(worst <= 1e-8);
}

TEST_CASE("normalizing translation maps the construction onto x = -y") {
    for (auto [l, c, a1, a2] : std::initializer_list<std::array<double, 4>>{
             {1.0, 0.0, 0.5, -0.3}, {1.2, 0.7, 0.3, -0.2}, {0.8, -1.1, 1.0, 2.0}}) {
        const ImmersedPatch patch = thm53_parametrization(l, c, a1, a2);
        const CoordPoint A = thm53_normalizing_translation(c, a1, a2);
        double worst = 0.0;
        for (double u : {-2.0, 0.3, 1.7})
            for (double v : {-1.5, 0.1, 1.5}) {
                const CoordPoint t = left_translation(patch.model(), A, patch.at(u, v));
                worst = std::max(worst, std::abs(t.x + t.y));
            }
        CHECK(worst <= 1e-10);
    }
    SUBCASE("the displayed matrix point works exactly when c = 0") {
        // (-a1, -a2, c/2) maps onto {x = -y} for c = 0 and misses for c != 0.
        const auto residual = [](double l, double c, double a1, double a2) {
            const ImmersedPatch patch = thm53_parametrization(l, c, a1, a2);
            const CoordPoint A{-a1, -a2, c / 2};
            double worst = 0.0;
            for (double u : {-1.0, 1.0})
                for (double v : {-1.0, 1.0}) {
                    const CoordPoint t = left_translation(patch.model(), A, patch.at(u, v));
                    worst = std::max(worst, std::abs(t.x + t.y));
                }
            return worst;
        };
        CHECK(residual(1.0, 0.0, 0.5, -0.3) <= 1e-12);
        CHECK(residual(1.2, 0.7, 0.3, -0.2) > 1e-3);
    }
}

TEST_CASE("e11_frame_system_residual") {
    SUBCASE("constructed surface solves the system with C = 0") {
        const ImmersedPatch patch = thm53_parametrization(1, 0, 0, 0);
        double worst = 0.0;
        for (double u : {-1.5, 0.0, 1.5})
            for (double v : {-1.5, 0.2, 1.5})
                worst = std::max(worst, e11_frame_system_residual(patch, u, v).max_abs());
        CHECK(worst <= 1e-6);
    }
    SUBCASE("exact type-(ii) surface solves the system") {
        const ImmersedPatch patch = catalog_patch("thm53-ii", 1, 1);
        double worst = 0.0;
        for (double u : {-1.0, 0.5})
            for (double v : {-1.2, 0.0, 1.2})
                worst = std::max(worst, e11_frame_system_residual(patch, u, v).max_abs());
        CHECK(worst <= 1e-6);
    }
    SUBCASE("perturbing theta breaks the angle equation") {
        // Same integration formulas with theta shifted by 0.1; at u = 0 the
        // normal stays in span{e1,e2} and eq6 picks up the perturbation.
        const double l = 1.0, m = 1.0, s2 = std::sqrt(2.0);
        auto f = [&](double u, double v) {
            const double th = theta_solution(l, 0, v) + 0.1;
            const double S = std::sin(th), C = std::cos(th);
            return CoordPoint{-u * std::exp(m * v) / (l * s2) * (S + C),
                              u * std::exp(-m * v) / (l * s2) * (S - C), m * v};
        };
        const ImmersedPatch perturbed(e11_model(1, 1), f);
        const FrameSystemResiduals r = e11_frame_system_residual(perturbed, 0.0, 0.4);
        CHECK(std::abs(r.eq6) > 1e-3);
        // Away from u = 0 the normal tilts out of span{e1,e2}.
        CHECK_THROWS_AS(e11_frame_system_residual(perturbed, 1.0, 0.4), wrong_case_error);
    }
    SUBCASE("wrong-case error for surfaces with normal e3") {
        const ImmersedPatch patch = catalog_patch("thm53-i", 1, 1);
        CHECK_THROWS_AS(e11_frame_system_residual(patch, 0.1, 0.1), wrong_case_error);
    }
    SUBCASE("requires an equal-parameter E(1,1) model") {
        const ImmersedPatch patch = catalog_patch("thm53-ii", 1.5, 0.6);
        CHECK_THROWS_AS(e11_frame_system_residual(patch, 0.0, 0.0), invalid_parameter_error);
    }
}

TEST_CASE("type-(ii) patch is classified exactly when the parameters coincide") {
    SUBCASE("equal parameters: vertically harmonic") {
        const TheoremReport rep = verify_theorem("5.3", {.lambda1 = 1.0, .lambda2 = 1.0});
        CHECK(rep.overall());
    }
    SUBCASE("unequal parameters: the analogous patch fails the residual test") {
        const ImmersedPatch patch = catalog_patch("thm53-ii", 1.5, 0.6);
        const CurvatureData R = riemann_tensor(patch.model().group_spec());
        double worst = 0.0;
        for (double u : {-1.0, 1.0})
            for (double v : {-1.5, 0.8})
                worst = std::max(worst, std::abs([&] {
                                     const auto [r1, r2] =
                                         vertical_residuals(R, surface_jet(patch, u, v));
                                     return std::max(std::abs(r1), std::abs(r2));
                                 }()));
        CHECK(worst > 1e-3);
    }
}

TEST_CASE("nonuni_classify") {
    SUBCASE("(1/2, 1): only the span{e2,e3} case") {
        const TheoremReport rep = nonuni_classify(0.5, 1.0);
        CHECK(rep.overall());
        REQUIRE(!rep.notes.empty());
        CHECK(rep.notes.front().second == "(i)");
    }
    SUBCASE("(1/2, 0): both cases, totally geodesic planes") {
        const TheoremReport rep = nonuni_classify(0.5, 0.0);
        CHECK(rep.overall());
        REQUIRE(!rep.notes.empty());
        CHECK(rep.notes.front().second == "(i),(ii)");
    }
    SUBCASE("xi in {0,1} is out of scope") {
        CHECK_THROWS_AS(nonuni_classify(0.0, 1.0), invalid_parameter_error);
        CHECK_THROWS_AS(nonuni_classify(1.0, 0.5), invalid_parameter_error);
    }
}

TEST_CASE("verify_theorem") {
    CHECK(verify_theorem("5.3", {.lambda1 = 1, .lambda2 = 1}).overall());
    CHECK(verify_theorem("5.3", {.lambda1 = 2, .lambda2 = 1}).overall());
    CHECK(verify_theorem("5.4", {.lambda1 = 2, .lambda2 = 1}).overall());
    CHECK(verify_theorem("5.1", {.c1 = 3, .c2 = 2, .c3 = 1}).overall());
    CHECK(!verify_theorem("5.1", {.c1 = 4, .c2 = 2, .c3 = 1}).overall());
    CHECK(verify_theorem("5.2", {.c1 = 3, .c2 = 1, .c3 = -2}).overall());
    CHECK(verify_theorem("4.5", {.xi = 0.5, .eta = 0.0}).overall());
    CHECK_THROWS_AS(verify_theorem("9.9", {}), invalid_parameter_error);
}

} // TEST_SUITE
