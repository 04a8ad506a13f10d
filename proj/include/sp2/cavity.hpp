#pragma once

#include <cstdint>

#include "sp2/decompose.hpp"
#include "sp2/mat2.hpp"

// Two-mirror laser cavity (equal concave mirrors, radius R, separation s).
// One round trip is two applications of the half-cycle matrix L built from
// one mirror reflection plus the propagation on either side of it; the
// cycle may start anywhere (offset d from a mirror).  After normalizing
// lengths by s, L depends only on a = d/s and b = 2s/R, its trace is 2 - b
// for every starting point, and N round trips evaluate in closed form as
// L^{2N}.  Observed angle bookkeeping: L is elliptic with cos theta* =
// 1 - b/2, so L^{2N} carries the rotation angle 2N theta*.

namespace sp2::cavity {

// Physical parameters, any consistent length unit.
struct CavitySpec {
    double mirror_radius = 1.0;    // R > 0
    double separation = 1.0;       // s > 0
    double start_offset = 0.0;     // d, 0 <= d <= s

    static CavitySpec make(double mirror_radius, double separation,
                           double start_offset);
};

// Dimensionless form: a = d/s in [0, 1], b = 2s/R >= 0 (b = 0 is the
// flat-mirror limit, reachable only through the normalized interface).
struct NormalizedCavity {
    double a = 0.0;
    double b = 1.0;

    static NormalizedCavity make(double a, double b);
    static NormalizedCavity from_spec(const CavitySpec& spec);
};

// [[1, 0], [-2/R, 1]]; R must be positive and finite.
Mat2 mirror_matrix(double radius);

// [[1, s], [0, 1]] for s >= 0.
Mat2 separation_matrix(double s);

// Normalized half-cycle L = [[1 - ab, 1 - ab(1-a)], [-b, 1 - b(1-a)]].
Mat2 half_cycle(const NormalizedCavity& n);

Decomposition cavity_decompose(const NormalizedCavity& n, const Tolerances& tol = {});

// L^{2N}: N full round trips.
Mat2 n_cycles(const NormalizedCavity& n, std::int64_t full_cycles,
              const Tolerances& tol = {});

// True iff the half-cycle is elliptic: |1 - b/2| < 1, i.e. 0 < b < 4
// (equivalently 0 < s < 2R).
bool stability(const NormalizedCavity& n);

} // namespace sp2::cavity
