#include "sp2/mat2.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace sp2 {

namespace detail {

double det_band(double scale, double det_tol) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (scale > 1e130) return std::numeric_limits<double>::infinity();
    return std::fmax(det_tol, 16.0 * eps * scale * scale);
}

} // namespace detail

namespace {

bool all_finite(const Mat2& m) {
    return std::isfinite(m.a) && std::isfinite(m.b) && std::isfinite(m.c) &&
           std::isfinite(m.d);
}

} // namespace

Mat2 Mat2::make(double a, double b, double c, double d, const Tolerances& tol) {
    const Mat2 m{a, b, c, d};
    if (!all_finite(m)) throw DomainError("Mat2: entries must be finite");
    const double dev = std::fabs(det(m) - 1.0);
    if (!(dev <= tol.det_tol))
        throw DeterminantError("Mat2: determinant deviates from 1 by " +
                               std::to_string(dev));
    return m;
}

double det(const Mat2& m) {
    const long double p = static_cast<long double>(m.a) * m.d;
    const long double q = static_cast<long double>(m.b) * m.c;
    return static_cast<double>(p - q);
}

double trace(const Mat2& m) { return m.a + m.d; }

double max_abs(const Mat2& m) {
    return std::fmax(std::fmax(std::fabs(m.a), std::fabs(m.b)),
                     std::fmax(std::fabs(m.c), std::fabs(m.d)));
}

double max_abs_diff(const Mat2& x, const Mat2& y) {
    return std::fmax(std::fmax(std::fabs(x.a - y.a), std::fabs(x.b - y.b)),
                     std::fmax(std::fabs(x.c - y.c), std::fabs(x.d - y.d)));
}

Mat2 multiply(const Mat2& m1, const Mat2& m2, const Tolerances& tol) {
    const long double a1 = m1.a, b1 = m1.b, c1 = m1.c, d1 = m1.d;
    const long double a2 = m2.a, b2 = m2.b, c2 = m2.c, d2 = m2.d;
    const Mat2 p{static_cast<double>(a1 * a2 + b1 * c2),
                 static_cast<double>(a1 * b2 + b1 * d2),
                 static_cast<double>(c1 * a2 + d1 * c2),
                 static_cast<double>(c1 * b2 + d1 * d2)};
    if (!all_finite(p)) throw OverflowError("multiply: product entry overflow");
    const double dev = std::fabs(det(p) - 1.0);
    if (!(dev <= detail::det_band(max_abs(p), tol.det_tol)))
        throw DeterminantError("multiply: product determinant deviates from 1 by " +
                               std::to_string(dev));
    return p;
}

Mat2 inverse(const Mat2& m) { return {m.d, -m.b, -m.c, m.a}; }

Mat2 rotation(double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    return {c, -s, s, c};
}

Mat2 squeeze(double eta) {
    const double e = std::exp(0.5 * eta);
    return {e, 0.0, 0.0, 1.0 / e};
}

double wrap_pi(double x) {
    const double r = std::remainder(x, 2.0 * M_PI);
    return r <= -M_PI ? M_PI : r;
}

} // namespace sp2
