#pragma once

#include <cstdint>

#include "sp2/decompose.hpp"
#include "sp2/mat2.hpp"

// Periodic two-medium multilayer in the real Sp(2) representation.  One
// period is boundary / phase / inverse boundary / phase, which collapses
// to M = Q(mu) R(alpha1/2) Q(mu)^{-1} R(alpha2/2) with the boundary
// rapidity mu fixed by cosh(mu/2) = 1/t, sinh(mu/2) = r/t.  M compresses
// through the rotation-boost-rotation form to an equi-diagonal core, whose
// trichotomy separates transmission bands (elliptic, bounded M^N) from
// gaps (hyperbolic, exponentially growing M^N).

namespace sp2::multilayer {

// Lossless interface amplitudes, r^2 + t^2 = 1.
struct BoundaryCoeffs {
    double r = 0.0; // reflection, |r| < 1
    double t = 1.0; // transmission, 0 < t <= 1

    static BoundaryCoeffs make(double r, double t, double tol = 1e-9);

    // Boundary rapidity mu = 2 artanh r.
    double mu() const;
};

enum class Direction { OneToTwo, TwoToOne };

// One period: interface coefficients plus the phases alpha1/2 = k1 d1 and
// alpha2/2 = k2 d2 accumulated in each medium.  Phases enter as alpha/2,
// so the cycle is 4*pi-periodic in each; echoes report them as given.
struct LayerCycle {
    BoundaryCoeffs boundary;
    double alpha1 = 0.0;
    double alpha2 = 0.0;

    static LayerCycle make(const BoundaryCoeffs& boundary, double alpha1,
                           double alpha2);
};

// Rotation-boost-rotation parameters of the one-cycle matrix:
// M = R(theta1/2) B(lambda) R(theta2/2) with theta2 = theta1 + alpha2;
// theta and delta are the symmetric/antisymmetric halves used to split
// M into a rotation conjugation of an equi-diagonal core.
struct CoreParams {
    double lambda = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    double theta = 0.0; // (theta1 + theta2)/2
    double delta = 0.0; // (theta1 - theta2)/2
};

// [[cosh(mu/2), sinh(mu/2)], [sinh(mu/2), cosh(mu/2)]], or its inverse
// for the second-to-first crossing.
Mat2 boundary_matrix(const BoundaryCoeffs& b, Direction direction);

// One-cycle matrix M (see header comment).
Mat2 cycle_matrix(const LayerCycle& c, const Tolerances& tol = {});

// Compress M to the rotation-boost-rotation form.  cosh lambda =
// cosh mu sqrt(1 - cos^2(alpha1/2) tanh^2 mu); the lambda sign is pinned
// by sinh lambda = -sinh mu sin(alpha1/2) and the theta1 branch by
// sin theta1 proportional to cosh mu sin(alpha1/2), which together make
// R(theta1/2) B(lambda) R(theta1/2) reproduce the squeezed-rotation part
// of M.
CoreParams core_compress(const LayerCycle& c);

// Equi-diagonal core: conjugating it by R(delta/2) recovers M.
std::pair<double, EquiDiag> stack_equi_diag(const CoreParams& p,
                                            const Tolerances& tol = {});

// Wigner factor of the core; sigma is the squeeze parameter (elliptic
// e^{2 sigma} = (cosh lambda sin theta - sinh lambda)/(cosh lambda sin
// theta + sinh lambda), rotation angle omega with cos omega = cosh lambda
// cos theta; hyperbolic analogue with cosh chi = cosh lambda cos theta).
std::pair<double, WignerClass> stack_classify(const EquiDiag& e,
                                              const Tolerances& tol = {});

// M^N in closed form.
Mat2 stack_power(const LayerCycle& c, std::int64_t n, const Tolerances& tol = {});

} // namespace sp2::multilayer
