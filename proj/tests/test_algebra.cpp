#include <doctest.h>

#include "liegauss/algebra.hpp"
#include "liegauss/errors.hpp"

#include <algorithm>
#include <random>

using namespace liegauss;

namespace {

Eigen::Vector3d random_vec(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    return {d(rng), d(rng), d(rng)};
}

} // namespace

TEST_SUITE("algebra") {

TEST_CASE("classify_unimodular matches the sign table") {
    CHECK(classify_unimodular({3, 2, 1}) == MilnorClass::SU2);
    CHECK(classify_unimodular({0, 0, 0}) == MilnorClass::AbelianR3);
    CHECK(classify_unimodular({3, 1, -2}) == MilnorClass::SL2R);
    CHECK(classify_unimodular({2, 1, 0}) == MilnorClass::E2tilde);
    CHECK(classify_unimodular({1, -1, 0}) == MilnorClass::E11);
    CHECK(classify_unimodular({1, 0, 0}) == MilnorClass::Heisenberg);
    // Sub-threshold values count as zero.
    CHECK(classify_unimodular({1, 1e-14, -1e-13}) == MilnorClass::Heisenberg);
}

TEST_CASE("classify_unimodular is permutation invariant") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int t = 0; t < 200; ++t) {
        double c[3] = {d(rng), d(rng), d(rng)};
        const MilnorClass ref = classify_unimodular({c[0], c[1], c[2]});
        std::sort(c, c + 3);
        do {
            CHECK(classify_unimodular({c[0], c[1], c[2]}) == ref);
        } while (std::next_permutation(c, c + 3));
    }
}

TEST_CASE("classify_unimodular reads patterns up to a global sign flip") {
    // A single basis flip negates all three constants, so (-,-,-) ~ (+,+,+)
    // and (+,-,-) ~ (-,+,+) ~ (+,+,-).
    CHECK(classify_unimodular({-3, -2, -1}) == MilnorClass::SU2);
    CHECK(classify_unimodular({2, -3, -1}) == MilnorClass::SL2R);
    CHECK(classify_unimodular({-1, -1, 0}) == MilnorClass::E2tilde);
}

TEST_CASE("mu_constants") {
    auto m = mu_constants({2, 2, 2});
    CHECK(m.mu1 == doctest::Approx(1).epsilon(1e-15));
    CHECK(m.mu2 == doctest::Approx(1).epsilon(1e-15));
    CHECK(m.mu3 == doctest::Approx(1).epsilon(1e-15));
    m = mu_constants({3, 2, 1});
    CHECK(m.mu1 == 0);
    CHECK(m.mu2 == 1);
    CHECK(m.mu3 == 2);
    m = mu_constants({0, 0, 0});
    CHECK(m.mu1 == 0);
    CHECK(m.mu2 == 0);
    CHECK(m.mu3 == 0);
}

TEST_CASE("bracket on basis vectors") {
    const GroupSpec uni = GroupSpec::unimodular(3, 2, 1);
    const Eigen::Vector3d e1(1, 0, 0), e2(0, 1, 0), e3(0, 0, 1);
    CHECK((bracket(uni, e1, e2) - Eigen::Vector3d(0, 0, 1)).norm() == 0.0);
    CHECK((bracket(uni, e2, e3) - Eigen::Vector3d(3, 0, 0)).norm() == 0.0);
    CHECK((bracket(uni, e3, e1) - Eigen::Vector3d(0, 2, 0)).norm() == 0.0);

    const GroupSpec non = GroupSpec::nonunimodular(0.5, 1.0);
    CHECK(bracket(non, e2, e3).norm() == 0.0);
    // [e1,e2] = a e2 + b e3 with a = 3/2, b = 3/2
    CHECK((bracket(non, e1, e2) - Eigen::Vector3d(0, 1.5, 1.5)).norm() < 1e-15);
    CHECK(bracket(non, e1, e1).norm() == 0.0);
}

TEST_CASE("bracket antisymmetry and Jacobi identity") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dc(-3.0, 3.0), dp(0.0, 3.0);
    for (int t = 0; t < 1000; ++t) {
        const GroupSpec spec = (t % 2 == 0)
                                   ? GroupSpec::unimodular(dc(rng), dc(rng), dc(rng))
                                   : GroupSpec::nonunimodular(dp(rng), dp(rng));
        const Eigen::Vector3d X = random_vec(rng), Y = random_vec(rng), Z = random_vec(rng);
        CHECK((bracket(spec, X, Y) + bracket(spec, Y, X)).cwiseAbs().maxCoeff() <= 1e-14);
        const Eigen::Vector3d jac = bracket(spec, X, bracket(spec, Y, Z)) +
                                    bracket(spec, Y, bracket(spec, Z, X)) +
                                    bracket(spec, Z, bracket(spec, X, Y));
        CHECK(jac.cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("nonunimodular_from_xi_eta") {
    auto s = nonunimodular_from_xi_eta(0, 0);
    CHECK(s.a == 1);
    CHECK(s.b == 0);
    CHECK(s.c == 0);
    CHECK(s.d == 1);
    s = nonunimodular_from_xi_eta(0.5, 1.0);
    CHECK(s.a == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(s.b == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(s.c == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(s.d == doctest::Approx(0.5).epsilon(1e-15));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d(0.0, 4.0);
    for (int t = 0; t < 500; ++t) {
        const auto q = nonunimodular_from_xi_eta(d(rng), d(rng));
        CHECK(q.a + q.d == 2.0);
        CHECK(std::abs(q.a * q.c + q.b * q.d) <= 1e-14);
    }

    CHECK_THROWS_AS(nonunimodular_from_xi_eta(-0.1, 0.0), invalid_parameter_error);
    CHECK_THROWS_AS(nonunimodular_from_xi_eta(0.0, -1.0), invalid_parameter_error);
}

TEST_CASE("isometry_dimension_hint") {
    CHECK(isometry_dimension_hint(GroupSpec::unimodular(2, 2, 2)) == 6);
    CHECK(isometry_dimension_hint(GroupSpec::unimodular(3, 2, 1)) == 3);
    CHECK(isometry_dimension_hint(GroupSpec::unimodular(2, 2, 1)) == 4);
    CHECK(isometry_dimension_hint(GroupSpec::unimodular(1, 0, 0)) == 4);   // Heisenberg
    CHECK(isometry_dimension_hint(GroupSpec::unimodular(1, 0, 1)) == 6);   // flat E2tilde
    CHECK(isometry_dimension_hint(GroupSpec::unimodular(0, 0, 0)) == 6);
    CHECK(isometry_dimension_hint(GroupSpec::unimodular(1, -1, 0)) == 3);  // Sol
    CHECK(isometry_dimension_hint(GroupSpec::nonunimodular(0, 1.3)) == 6);
    CHECK(isometry_dimension_hint(GroupSpec::nonunimodular(1, 0.7)) == 4);
    CHECK(isometry_dimension_hint(GroupSpec::nonunimodular(0.5, 1)) == 3);
}

} // TEST_SUITE
