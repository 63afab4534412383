#include "liegauss/algebra.hpp"

#include "liegauss/errors.hpp"

#include <algorithm>
#include <cmath>

namespace liegauss {

const char* to_string(MilnorClass cls) {
    switch (cls) {
        case MilnorClass::SU2: return "SU2";
        case MilnorClass::SL2R: return "SL2R";
        case MilnorClass::E2tilde: return "E2tilde";
        case MilnorClass::E11: return "E11";
        case MilnorClass::Heisenberg: return "Heisenberg";
        case MilnorClass::AbelianR3: return "AbelianR3";
    }
    return "?";
}

GroupSpec GroupSpec::unimodular(double c1, double c2, double c3) {
    return GroupSpec(UnimodularSpec{c1, c2, c3});
}

GroupSpec GroupSpec::unimodular(const UnimodularSpec& spec) { return GroupSpec(spec); }

GroupSpec GroupSpec::nonunimodular(double xi, double eta) {
    return GroupSpec(nonunimodular_from_xi_eta(xi, eta));
}

GroupSpec GroupSpec::nonunimodular(const NonUnimodularSpec& spec) { return GroupSpec(spec); }

MilnorClass classify_unimodular(const UnimodularSpec& spec) {
    auto sign = [](double c) { return std::abs(c) < kSignZeroTol ? 0 : (c > 0 ? 1 : -1); };
    int pos = 0, neg = 0;
    for (double c : {spec.c1, spec.c2, spec.c3}) {
        int s = sign(c);
        pos += (s > 0);
        neg += (s < 0);
    }
    // A basis-vector flip negates all three constants; canonicalize to pos >= neg.
    if (neg > pos) std::swap(pos, neg);
    if (pos == 3) return MilnorClass::SU2;
    if (pos == 2 && neg == 1) return MilnorClass::SL2R;
    if (pos == 2) return MilnorClass::E2tilde;
    if (pos == 1 && neg == 1) return MilnorClass::E11;
    if (pos == 1) return MilnorClass::Heisenberg;
    return MilnorClass::AbelianR3;
}

MuTriple mu_constants(const UnimodularSpec& spec) {
    const double half = 0.5 * (spec.c1 + spec.c2 + spec.c3);
    return {half - spec.c1, half - spec.c2, half - spec.c3};
}

NonUnimodularSpec nonunimodular_from_xi_eta(double xi, double eta) {
    if (xi < 0.0 || eta < 0.0)
        throw invalid_parameter_error("nonunimodular_from_xi_eta: xi and eta must be >= 0");
    NonUnimodularSpec s;
    s.xi = xi;
    s.eta = eta;
    s.a = 1.0 + xi;
    s.d = 2.0 - s.a;  // keeps a + d = 2 exact
    s.b = s.a * eta;
    s.c = -s.d * eta;
    return s;
}

Eigen::Vector3d bracket(const GroupSpec& spec, const Eigen::Vector3d& X, const Eigen::Vector3d& Y) {
    if (spec.is_unimodular()) {
        const auto& u = spec.unimodular_spec();
        return {u.c1 * (X(1) * Y(2) - X(2) * Y(1)),
                u.c2 * (X(2) * Y(0) - X(0) * Y(2)),
                u.c3 * (X(0) * Y(1) - X(1) * Y(0))};
    }
    const auto& n = spec.nonunimodular_spec();
    const double w12 = X(0) * Y(1) - X(1) * Y(0);
    const double w13 = X(0) * Y(2) - X(2) * Y(0);
    return {0.0, n.a * w12 + n.c * w13, n.b * w12 + n.d * w13};
}

int isometry_dimension_hint(const GroupSpec& spec) {
    constexpr double tol = 1e-12;
    if (spec.is_unimodular()) {
        const auto& u = spec.unimodular_spec();
        // Constant-curvature metrics have all three plane curvatures equal.
        const double half = 0.5 * (u.c1 + u.c2 + u.c3);
        const double m1 = half - u.c1, m2 = half - u.c2, m3 = half - u.c3;
        const double K12 = u.c3 * m3 - m1 * m2;
        const double K23 = u.c1 * m1 - m2 * m3;
        const double K13 = u.c2 * m2 - m1 * m3;
        if (std::abs(K12 - K23) < tol && std::abs(K12 - K13) < tol) return 6;
        const bool two_coincide = std::abs(u.c1 - u.c2) < tol || std::abs(u.c2 - u.c3) < tol ||
                                  std::abs(u.c1 - u.c3) < tol;
        return two_coincide ? 4 : 3;
    }
    const auto& n = spec.nonunimodular_spec();
    if (std::abs(n.xi) < tol) return 6;
    if (std::abs(n.xi - 1.0) < tol) return 4;
    return 3;
}

} // namespace liegauss
