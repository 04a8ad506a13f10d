#pragma once

#include <cmath>

#include "sp2/errors.hpp"

namespace sp2 {

// Tolerance knobs shared across the library.  Defaults give double
// precision headroom for squeeze parameters up to |eta| ~ 5.
struct Tolerances {
    double det_tol = 1e-9;   // |det - 1| bound for validated inputs
    double class_tol = 1e-9; // elliptic/parabolic/hyperbolic trichotomy band
    double recon_tol = 1e-9; // decompose -> reconstruct round-trip bound
    double parab_tol = 1e-7; // off-diagonal "vanishes" bound in the parabolic branch
};

// Real 2x2 matrix [[a, b], [c, d]] with unit determinant (ad - bc = 1).
// Plain aggregate; use make() to validate untrusted input.  Internal
// constructions that are symplectic by construction brace-initialize.
struct Mat2 {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 1.0;

    static Mat2 make(double a, double b, double c, double d,
                     const Tolerances& tol = {});

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

// ad - bc accumulated in long double; the subtraction cancels to
// O(|m|^2 eps), so the extra width keeps the measurement honest.
double det(const Mat2& m);

double trace(const Mat2& m);

// Largest entry magnitude.
double max_abs(const Mat2& m);

// Max-norm of the difference.
double max_abs_diff(const Mat2& x, const Mat2& y);

// Product m1 * m2, revalidated against det_tol.  The validation band
// widens with entry magnitude: for entries of size s the determinant of
// a rounded product can only be trusted to O(s^2 eps).
Mat2 multiply(const Mat2& m1, const Mat2& m2, const Tolerances& tol = {});

// Exact inverse [[d, -b], [-c, a]] of a unit-determinant matrix.
Mat2 inverse(const Mat2& m);

// Rotation R(phi) = [[cos phi, -sin phi], [sin phi, cos phi]].
Mat2 rotation(double phi);

// Squeeze Q(eta) = diag(e^{eta/2}, e^{-eta/2}).
Mat2 squeeze(double eta);

// Reduce an angle to the principal range (-pi, pi].
double wrap_pi(double x);

namespace detail {

// Validation band for a unit-determinant check on entries of magnitude
// scale: det_tol for O(1) entries, O(scale^2 eps) once the ad - bc
// cancellation dominates, unbounded where the square would overflow.
double det_band(double scale, double det_tol);

} // namespace detail

} // namespace sp2
