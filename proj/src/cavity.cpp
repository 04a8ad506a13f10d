#include "sp2/cavity.hpp"

#include <cmath>
#include <string>

namespace sp2::cavity {

CavitySpec CavitySpec::make(double mirror_radius, double separation,
                            double start_offset) {
    if (!(std::isfinite(mirror_radius) && mirror_radius > 0.0))
        throw DomainError("CavitySpec: mirror radius must be positive and finite");
    if (!(std::isfinite(separation) && separation > 0.0))
        throw DomainError("CavitySpec: mirror separation must be positive and finite");
    if (!(std::isfinite(start_offset) && start_offset >= 0.0 &&
          start_offset <= separation))
        throw DomainError("CavitySpec: start offset must lie within [0, separation]");
    return {mirror_radius, separation, start_offset};
}

NormalizedCavity NormalizedCavity::make(double a, double b) {
    if (!(std::isfinite(a) && a >= 0.0 && a <= 1.0))
        throw DomainError("NormalizedCavity: a = d/s must lie in [0, 1]");
    if (!(std::isfinite(b) && b >= 0.0))
        throw DomainError("NormalizedCavity: b = 2s/R must be nonnegative");
    return {a, b};
}

NormalizedCavity NormalizedCavity::from_spec(const CavitySpec& spec) {
    return make(spec.start_offset / spec.separation,
                2.0 * spec.separation / spec.mirror_radius);
}

Mat2 mirror_matrix(double radius) {
    if (!(std::isfinite(radius) && radius > 0.0))
        throw DomainError("mirror_matrix: radius must be positive and finite");
    return {1.0, 0.0, -2.0 / radius, 1.0};
}

Mat2 separation_matrix(double s) {
    if (!(std::isfinite(s) && s >= 0.0))
        throw DomainError("separation_matrix: separation must be nonnegative");
    return {1.0, s, 0.0, 1.0};
}

Mat2 half_cycle(const NormalizedCavity& n) {
    const double ab = n.a * n.b;
    return {1.0 - ab, 1.0 - ab * (1.0 - n.a), -n.b, 1.0 - n.b * (1.0 - n.a)};
}

Decomposition cavity_decompose(const NormalizedCavity& n, const Tolerances& tol) {
    return decompose(half_cycle(n), tol);
}

Mat2 n_cycles(const NormalizedCavity& n, std::int64_t full_cycles,
              const Tolerances& tol) {
    if (full_cycles < 0)
        throw DomainError("n_cycles: cycle count must be nonnegative");
    if (full_cycles > (std::int64_t{1} << 61))
        throw DomainError("n_cycles: cycle count must not exceed 2^61");
    return matrix_power(half_cycle(n), 2 * full_cycles, tol);
}

bool stability(const NormalizedCavity& n) {
    return std::fabs(1.0 - 0.5 * n.b) < 1.0;
}

} // namespace sp2::cavity
