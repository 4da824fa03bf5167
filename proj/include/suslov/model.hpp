#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "suslov/errors.hpp"

namespace suslov {

/// Symmetric inertia tensor in the constraint-adapted frame: the constraint
/// axis is e3 and the frame is chosen so that I12 = 0. Stored det-normalized
/// (det I = 1); construct through make_inertia() to enforce that.
struct InertiaTensor {
    double I11 = 1.0;
    double I22 = 1.0;
    double I33 = 1.0;
    double I13 = 0.0;
    double I23 = 0.0;

    double det() const;
};

/// Rescales I -> I / det^(1/3) so that det = 1. Throws InvalidShape if the
/// tensor is not positive definite (normalization is meaningless then).
InertiaTensor make_inertia(double I11, double I22, double I33, double I13, double I23);

struct InertiaDiagnostics {
    bool pass = false;
    double det_deviation = 0.0; // |det - 1|
    std::vector<std::string> violations;
};

/// Positive-definiteness + normalization diagnostics. Never throws.
InertiaDiagnostics validate_inertia(const InertiaTensor& I);

/// Parameters of the heteroclinic solution of the angular-velocity equations,
/// at the normalized energy level (time rescaled so A = 1).
///
/// omega1 = (a (e^t - e^-t) + c1) / (e^t + e^-t), same for omega2 with (b, c2).
/// The special-case block (c, d, p) is filled only when I13 = 0 and I11 > I22.
struct SuslovParams {
    double a = 0.0;
    double b = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    int sign_branch = -1; // sign of the +-2 pair in (c1, c2)

    // special case I13 = 0
    bool special = false;
    double c = 0.0; // sqrt(I11/I22)
    double d = 0.0; // sqrt(c^2 - 1)
    double p = 0.0; // d * a

    // cached energy denominator I13^2 I22 + I23^2 I11 (0 if built from (p,d))
    double energy_denom = 0.0;
};

/// Derives (a, b, c1, c2) from a valid tensor; fills the special-case block
/// when I13 = 0. sign_branch = -1 picks the branch with c2 < 0 for I23 > 0.
/// Throws DegenerateAxis if I13 = I23 = 0, DegenerateBalance if I13 = 0 and
/// I11 = I22.
SuslovParams params_from_inertia(const InertiaTensor& I, int sign_branch = -1);

/// Special-case parameters straight from (p, d): a = p/d, c = sqrt(d^2+1),
/// c1 = b = 0, c2 = -2 c a.
SuslovParams params_from_pd(double p, double d);

/// Physical tensor realizing a prescribed meromorphicity parameter p with
/// I13 = 0. Requires I11 > I22 > 0, I33 + I22 > I11, p > 0. The input diagonal
/// acts as a shape; it is scaled by a factor lambda (reported via *scale) so
/// that the result has det = 1 exactly, keeping the classification parameter
/// equal to p. branch = -1 (default) guarantees I22 I33 - I23^2 > 0; the +1
/// branch yields an indefinite tensor and is returned unnormalized, for
/// inspection only.
InertiaTensor inertia_from_p(double p, double I11, double I22, double I33,
                             int branch = -1, double* scale = nullptr);

/// Phase-space point of the reduced problem: omega3 = 0 identically.
struct BodyState {
    double w1 = 0.0, w2 = 0.0;
    double g1 = 0.0, g2 = 0.0, g3 = 0.0;
};

/// The involution (w1,w2) -> (-w2,-w1), (g1,g2) -> (g2,g1) that conjugates
/// the I23 = 0 case to the I13 = 0 case.
BodyState apply_swap_symmetry(const BodyState& x);
InertiaTensor apply_swap_symmetry(const InertiaTensor& I);

enum class MeromorphicityCase {
    Case1_I13zero,
    Case2_I23zero,
    NonMeromorphic,
    Degenerate_I11eqI22,
};

struct MeromorphicityVerdict {
    MeromorphicityCase kind = MeromorphicityCase::NonMeromorphic;
    double p_value = 0.0; // NaN when p^2 < 0 (no real p)
    bool p_is_integer = false;
    enum class Parity { Odd, Even, None } parity = Parity::None;
};

std::string to_string(MeromorphicityCase c);

/// Classifies a valid tensor against the single-valuedness conditions.
/// Case1/Case2 are reported only when p is a nonzero integer within 1e-9.
MeromorphicityVerdict meromorphicity_class(const InertiaTensor& I);

/// Eigenvalues of the Kovalevskaya matrix at the scale-invariant balance
/// of the quadratic vector field; always contains {2, 1, -1}.
/// conjugate_balance = true uses the complex-conjugate balance point.
std::array<std::complex<double>, 5> kovalevskaya_spectrum(const InertiaTensor& I,
                                                          bool conjugate_balance = false);

/// Eigenvalues (rho1, rho2, rho3) of the residue matrix of the linearized
/// Poisson system at a singular time: rho1 = 0 and
/// rho2,3 = +-(1/2) sqrt(c1^2 + c2^2 - 4(a^2+b^2) + 4 i (a c1 + b c2)).
std::array<std::complex<double>, 3> residue_eigenvalues(const SuslovParams& P);

/// The residue matrix itself (for cross-checks against an eigensolver).
std::array<std::array<std::complex<double>, 3>, 3> residue_matrix(const SuslovParams& P);

} // namespace suslov
