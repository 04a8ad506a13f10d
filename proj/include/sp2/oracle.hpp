#pragma once

#include <cstdint>
#include <string>

#include "sp2/decompose.hpp"
#include "sp2/mat2.hpp"

// Independent brute-force verification layer: naive repeated
// multiplication, reproducible random symplectic matrices, and
// tolerance-aware comparison.  Nothing here goes through the
// decompose/reconstruct path it is used to check.

namespace sp2::oracle {

struct ComparisonReport {
    double max_abs_err = 0.0; // elementwise max |x - y|
    double max_rel_err = 0.0; // normwise: max_abs_err / max entry magnitude
    std::int64_t n_trials = 0;
    std::string worst_case; // echo of the worst input, for replay
    bool passed = true;
};

// Left fold of n multiplications (pairwise split above 1024 factors to
// bound rounding drift).  Throws OverflowError once an entry passes 1e300.
Mat2 brute_power(const Mat2& m, std::int64_t n);

// Relative class draw weights; parabolic splits evenly between the upper
// and lower shear.
struct ClassWeights {
    double elliptic = 1.0;
    double hyperbolic = 1.0;
    double parabolic = 1.0;
    double identity = 0.0;
};

// Reproducible symplectic matrix generator: draw(i) is a pure function of
// (seed, i), so trials can be replayed or evaluated in parallel.  Each
// draw picks (delta, eta, class, parameter) and reconstructs, making the
// output symplectic by construction:
//   delta uniform on (-pi/2, pi/2], eta uniform on [-eta_max, eta_max],
//   theta* uniform on +/-[1e-3, pi - 1e-3], lambda* on +/-[1e-3, 0.6],
//   gamma* on +/-[1e-3, 5].
// The parameter floors keep draws out of the near-parabolic band where
// the trichotomy is numerically ambiguous; the lambda* cap keeps N = 1000
// brute-force powers representable.
class Sp2Sampler {
public:
    explicit Sp2Sampler(std::uint64_t seed, double eta_max = 5.0,
                        ClassWeights weights = {});

    Mat2 draw(std::uint64_t index) const;

    // The decomposition behind draw(index), for tests that need the
    // ground-truth class.
    Decomposition draw_decomposition(std::uint64_t index) const;

private:
    std::uint64_t seed_;
    double eta_max_;
    ClassWeights weights_;
    double total_weight_;
};

Mat2 random_sp2(std::uint64_t seed, double eta_max = 5.0, ClassWeights weights = {});

// Max-norm comparison: passes when the elementwise max error fits the
// absolute band or the normwise relative error fits the relative band.
ComparisonReport compare(const Mat2& closed, const Mat2& brute, double rel_tol,
                         double abs_tol);

// Closed-form power vs brute force over `trials` sampler draws and every
// exponent in n_list.  Entries beyond 1e6 in magnitude widen the absolute
// band to loose_abs_tol (rounding at that scale exceeds tight bounds).
ComparisonReport verify_powers(const Sp2Sampler& sampler, std::int64_t trials,
                               const std::int64_t* n_list, std::size_t n_count,
                               double rel_tol = 1e-8, double abs_tol = 1e-9,
                               double loose_abs_tol = 1e-6,
                               const Tolerances& tol = {});

} // namespace sp2::oracle
