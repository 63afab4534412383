#pragma once

/// Lie-algebra level data for 3-dimensional metric Lie groups: structure
/// constants in the canonical orthonormal frame, brackets, the Milnor sign
/// classification, and the normalized non-unimodular parameters.

#include <Eigen/Dense>
#include <variant>

namespace liegauss {

// |c| below this threshold counts as zero when reading sign patterns.
inline constexpr double kSignZeroTol = 1e-12;

/// Unimodular frame: [e1,e2]=c3 e3, [e2,e3]=c1 e1, [e3,e1]=c2 e2.
struct UnimodularSpec {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
};

/// mu_i = (c1+c2+c3)/2 - c_i.
struct MuTriple {
    double mu1 = 0.0;
    double mu2 = 0.0;
    double mu3 = 0.0;
};

/// Non-unimodular frame with a+d=2 normalization:
///   [e1,e2] = a e2 + b e3,  [e2,e3] = 0,  [e1,e3] = c e2 + d e3,
///   a = 1+xi, b = (1+xi)eta, c = -(1-xi)eta, d = 1-xi,  xi,eta >= 0.
struct NonUnimodularSpec {
    double xi = 0.0;
    double eta = 0.0;
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 1.0;
};

enum class MilnorClass { SU2, SL2R, E2tilde, E11, Heisenberg, AbelianR3 };

const char* to_string(MilnorClass cls);

/// Tagged union over the two metric Lie algebra families.
class GroupSpec {
public:
    static GroupSpec unimodular(double c1, double c2, double c3);
    static GroupSpec unimodular(const UnimodularSpec& spec);
    /// Throws invalid_parameter_error for negative xi or eta.
    static GroupSpec nonunimodular(double xi, double eta);
    static GroupSpec nonunimodular(const NonUnimodularSpec& spec);

    bool is_unimodular() const { return std::holds_alternative<UnimodularSpec>(value_); }
    const UnimodularSpec& unimodular_spec() const { return std::get<UnimodularSpec>(value_); }
    const NonUnimodularSpec& nonunimodular_spec() const { return std::get<NonUnimodularSpec>(value_); }

private:
    explicit GroupSpec(UnimodularSpec s) : value_(s) {}
    explicit GroupSpec(NonUnimodularSpec s) : value_(s) {}
    std::variant<UnimodularSpec, NonUnimodularSpec> value_;
};

/// Milnor class from the sign pattern of (c1,c2,c3). The pattern is read up to
/// permutation and a global sign flip (a single basis-vector flip negates all
/// three constants), so every input matches a table row.
MilnorClass classify_unimodular(const UnimodularSpec& spec);

MuTriple mu_constants(const UnimodularSpec& spec);

/// Derived (a,b,c,d) satisfy a+d=2 exactly and ac+bd=0 up to roundoff.
/// Throws invalid_parameter_error for negative xi or eta.
NonUnimodularSpec nonunimodular_from_xi_eta(double xi, double eta);

/// Bilinear antisymmetric extension of the basis brackets. X, Y and the result
/// are coefficient vectors in the canonical orthonormal frame.
Eigen::Vector3d bracket(const GroupSpec& spec, const Eigen::Vector3d& X, const Eigen::Vector3d& Y);

/// Dimension of the isometry group of the associated simply connected group:
/// 6 for constant-curvature metrics, 4 when exactly two unimodular constants
/// coincide (resp. xi=1), 3 otherwise.
int isometry_dimension_hint(const GroupSpec& spec);

} // namespace liegauss
