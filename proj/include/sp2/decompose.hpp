#pragma once

#include <complex>
#include <cstdint>
#include <utility>

#include "sp2/mat2.hpp"

// Every real 2x2 matrix M with det M = 1 can be written M = +/- S W S^{-1},
// where W is one of four one-parameter equi-diagonal matrices (a rotation,
// a symmetric boost, or an upper/lower shear) and S = R(delta/2) Q(eta) is a
// rotation preceded by a squeeze.  Because the W family composes by adding
// parameters, M^N costs one decomposition regardless of N.
//
// The pipeline: equi_diagonalize rotates M so its diagonal entries are
// equal, wigner_factor peels the squeeze off that equi-diagonal matrix, and
// decompose/reconstruct chain the two with a sign flag for trace < -2.

namespace sp2 {

// Trace-based conjugacy trichotomy: |trace|/2 below, above, or at 1.
enum class MatrixClass { Elliptic, Hyperbolic, Parabolic, Identity };

enum class WignerKind { Elliptic, Hyperbolic, ParabolicUpper, ParabolicLower, Identity };

// One of the four one-parameter equi-diagonal matrices (plus identity):
//   Elliptic        [[cos t, -sin t], [sin t, cos t]]      t = theta*
//   Hyperbolic      [[cosh l, sinh l], [sinh l, cosh l]]   l = lambda*
//   ParabolicUpper  [[1, -g], [0, 1]]                      g = gamma*
//   ParabolicLower  [[1, 0], [g, 1]]
// Composition within a class adds parameters, so N-th powers scale the
// parameter by N.
struct WignerClass {
    WignerKind kind = WignerKind::Identity;
    double param = 0.0; // theta* in (-pi, pi] | lambda* | gamma* | unused

    static WignerClass elliptic(double theta_star);
    static WignerClass hyperbolic(double lambda_star);
    static WignerClass parabolic_upper(double gamma_star);
    static WignerClass parabolic_lower(double gamma_star);
    static WignerClass identity() { return {}; }

    Mat2 materialize() const;
};

// Matrix with equal diagonal entries J and off-diagonals F, G; the unit
// determinant becomes J^2 - FG = 1.
struct EquiDiag {
    double j = 1.0;
    double f = 0.0;
    double g = 0.0;

    static EquiDiag make(double j, double f, double g, const Tolerances& tol = {});

    Mat2 materialize() const { return {j, f, g, j}; }
};

// M = sign * R(delta/2) Q(eta) W Q(eta)^{-1} R(delta/2)^{-1},
// sign = -1 iff negated.
struct Decomposition {
    double delta = 0.0; // conjugating rotation parameter, in (-pi, pi]
    double eta = 0.0;   // squeeze rapidity
    WignerClass wigner;
    bool negated = false;
};

// Rotation-boost-rotation form with equal outer angles,
// R(theta/2) B(lambda) R(theta/2); composes to an equi-diagonal matrix.
struct BargmannForm {
    double theta = 0.0;
    double lambda = 0.0;
};

MatrixClass classify(const Mat2& m, const Tolerances& tol = {});

// Eigenvalue pair (E+, E-); E+ E- = det = 1.  Complex on the elliptic
// branch, real otherwise.
std::pair<std::complex<double>, std::complex<double>> eigenvalues(const Mat2& m);

// Rotation angle delta and the conjugated matrix N = R(-delta/2) M R(delta/2)
// with equal diagonals.  tan delta = (D - A)/(B + C); delta is reduced to
// [-pi/2, pi/2], keeping atan2's sign at the B + C = 0 tie.  The returned
// J is exactly (A + D)/2 (trace is preserved under similarity).
std::pair<double, EquiDiag> equi_diagonalize(const Mat2& m);

// Squeeze rapidity eta and Wigner matrix W with Q(eta) W Q(eta)^{-1}
// reproducing the equi-diagonal input:
//   |J| < 1   elliptic,   cos theta* = J, sign(sin theta*) = sign(G),
//             e^{2 eta} = -F/G
//   J > 1     hyperbolic, lambda* = sign(F) arcosh J, e^{2 eta} = F/G
//   |J| ~ 1   shear (or identity) with eta = 0; F or G must vanish
// Requires J > -(1 - class_tol); negate the matrix first otherwise.
std::pair<double, WignerClass> wigner_factor(const EquiDiag& e,
                                             const Tolerances& tol = {});

Decomposition decompose(const Mat2& m, const Tolerances& tol = {});

Mat2 reconstruct(const Decomposition& d, const Tolerances& tol = {});

// W^n by parameter scaling; n = 0 collapses hyperbolic/parabolic to
// identity (their parameters exclude 0), elliptic wraps n*theta*.
WignerClass wigner_power(const WignerClass& w, std::int64_t n);

// M^n = sign^n S W^n S^{-1} in O(1): decompose, scale, reconstruct.
Mat2 matrix_power(const Mat2& m, std::int64_t n, const Tolerances& tol = {});

// J = cosh l cos t, F = -cosh l sin t + sinh l, G = cosh l sin t + sinh l;
// equals the triple product R(t/2) B(l) R(t/2).
EquiDiag bargmann_compose(const BargmannForm& f, const Tolerances& tol = {});

const char* to_string(WignerKind k);
const char* to_string(MatrixClass c);

} // namespace sp2
