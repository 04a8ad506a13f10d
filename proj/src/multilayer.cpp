#include "sp2/multilayer.hpp"

#include <cmath>
#include <string>

namespace sp2::multilayer {

BoundaryCoeffs BoundaryCoeffs::make(double r, double t, double tol) {
    if (!(std::isfinite(r) && std::isfinite(t)))
        throw DomainError("BoundaryCoeffs: coefficients must be finite");
    if (!(t > 0.0 && t <= 1.0) || !(std::fabs(r) < 1.0))
        throw DomainError("BoundaryCoeffs: need 0 < t <= 1 and |r| < 1");
    const double dev = std::fabs(r * r + t * t - 1.0);
    if (!(dev <= tol))
        throw DomainError("BoundaryCoeffs: lossy interface, r^2 + t^2 - 1 = " +
                          std::to_string(r * r + t * t - 1.0));
    return {r, t};
}

double BoundaryCoeffs::mu() const { return 2.0 * std::atanh(r); }

LayerCycle LayerCycle::make(const BoundaryCoeffs& boundary, double alpha1,
                            double alpha2) {
    if (!(std::isfinite(alpha1) && std::isfinite(alpha2)))
        throw DomainError("LayerCycle: phases must be finite");
    return {boundary, alpha1, alpha2};
}

Mat2 boundary_matrix(const BoundaryCoeffs& b, Direction direction) {
    // cosh(mu/2) = 1/t and sinh(mu/2) = r/t, straight from the coefficients.
    const double ch = 1.0 / b.t;
    const double sh = (direction == Direction::OneToTwo ? b.r : -b.r) / b.t;
    return {ch, sh, sh, ch};
}

Mat2 cycle_matrix(const LayerCycle& c, const Tolerances& tol) {
    // Q(mu) R(alpha1/2) Q(mu)^{-1} collapses to the squeezed rotation
    // [[cos(alpha1/2), -e^mu sin(alpha1/2)], [e^{-mu} sin(alpha1/2), ...]];
    // e^{mu/2} = (1 + r)/t keeps the exponential exact in the coefficients.
    const double half_exp = (1.0 + c.boundary.r) / c.boundary.t;
    const double emu = half_exp * half_exp;
    const double ca = std::cos(0.5 * c.alpha1), sa = std::sin(0.5 * c.alpha1);
    const Mat2 squeezed{ca, -emu * sa, sa / emu, ca};
    return multiply(squeezed, rotation(0.5 * c.alpha2), tol);
}

CoreParams core_compress(const LayerCycle& c) {
    const double mu = c.boundary.mu();
    const double sa = std::sin(0.5 * c.alpha1);
    const double ca = std::cos(0.5 * c.alpha1);

    // Matching the symmetric and antisymmetric off-diagonal parts of the
    // squeezed rotation against the Bargmann core gives
    //   sinh lambda = -sinh mu sin(alpha1/2)
    //   cosh lambda sin theta1 = cosh mu sin(alpha1/2)
    //   cosh lambda cos theta1 = cos(alpha1/2)
    const double sl = -std::sinh(mu) * sa;
    CoreParams p;
    p.lambda = std::asinh(sl);
    p.theta1 = std::atan2(std::cosh(mu) * sa, ca);
    p.theta2 = p.theta1 + c.alpha2;
    p.theta = 0.5 * (p.theta1 + p.theta2);
    p.delta = 0.5 * (p.theta1 - p.theta2);
    return p;
}

std::pair<double, EquiDiag> stack_equi_diag(const CoreParams& p,
                                            const Tolerances& tol) {
    return {p.delta, bargmann_compose({p.theta, p.lambda}, tol)};
}

std::pair<double, WignerClass> stack_classify(const EquiDiag& e,
                                              const Tolerances& tol) {
    return wigner_factor(e, tol);
}

Mat2 stack_power(const LayerCycle& c, std::int64_t n, const Tolerances& tol) {
    if (n < 0) throw DomainError("stack_power: cycle count must be nonnegative");
    return matrix_power(cycle_matrix(c, tol), n, tol);
}

} // namespace sp2::multilayer
