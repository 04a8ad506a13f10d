#include "sp2/decompose.hpp"

#include <cmath>
#include <string>

namespace sp2 {

WignerClass WignerClass::elliptic(double theta_star) {
    return {WignerKind::Elliptic, wrap_pi(theta_star)};
}

WignerClass WignerClass::hyperbolic(double lambda_star) {
    return {WignerKind::Hyperbolic, lambda_star};
}

WignerClass WignerClass::parabolic_upper(double gamma_star) {
    return {WignerKind::ParabolicUpper, gamma_star};
}

WignerClass WignerClass::parabolic_lower(double gamma_star) {
    return {WignerKind::ParabolicLower, gamma_star};
}

Mat2 WignerClass::materialize() const {
    switch (kind) {
        case WignerKind::Elliptic: {
            const double c = std::cos(param), s = std::sin(param);
            return {c, -s, s, c};
        }
        case WignerKind::Hyperbolic: {
            const double ch = std::cosh(param), sh = std::sinh(param);
            return {ch, sh, sh, ch};
        }
        case WignerKind::ParabolicUpper:
            return {1.0, -param, 0.0, 1.0};
        case WignerKind::ParabolicLower:
            return {1.0, 0.0, param, 1.0};
        case WignerKind::Identity:
            return Mat2::identity();
    }
    return Mat2::identity();
}

EquiDiag EquiDiag::make(double j, double f, double g, const Tolerances& tol) {
    if (!(std::isfinite(j) && std::isfinite(f) && std::isfinite(g)))
        throw DomainError("EquiDiag: entries must be finite");
    const long double jj = static_cast<long double>(j) * j;
    const long double fg = static_cast<long double>(f) * g;
    const double dev = std::fabs(static_cast<double>(jj - fg - 1.0L));
    const double scale = std::fmax(std::fabs(j), std::fmax(std::fabs(f), std::fabs(g)));
    if (!(dev <= detail::det_band(scale, tol.det_tol)))
        throw DeterminantError("EquiDiag: J^2 - FG deviates from 1 by " +
                               std::to_string(dev));
    return {j, f, g};
}

namespace {

bool near_identity_up_to_sign(const Mat2& m, double tol) {
    const double s = m.a >= 0.0 ? 1.0 : -1.0;
    return std::fabs(m.a - s) <= tol && std::fabs(m.d - s) <= tol &&
           std::fabs(m.b) <= tol && std::fabs(m.c) <= tol;
}

} // namespace

MatrixClass classify(const Mat2& m, const Tolerances& tol) {
    const double j = 0.5 * trace(m);
    if (std::fabs(j) < 1.0 - tol.class_tol) return MatrixClass::Elliptic;
    if (std::fabs(j) > 1.0 + tol.class_tol) return MatrixClass::Hyperbolic;
    if (near_identity_up_to_sign(m, tol.class_tol)) return MatrixClass::Identity;
    return MatrixClass::Parabolic;
}

std::pair<std::complex<double>, std::complex<double>> eigenvalues(const Mat2& m) {
    const double half_tr = 0.5 * trace(m);
    const double disc = (m.a - m.d) * (m.a - m.d) + 4.0 * m.b * m.c;
    if (disc >= 0.0) {
        const double root = 0.5 * std::sqrt(disc);
        return {std::complex<double>(half_tr + root, 0.0),
                std::complex<double>(half_tr - root, 0.0)};
    }
    const double root = 0.5 * std::sqrt(-disc);
    return {std::complex<double>(half_tr, root),
            std::complex<double>(half_tr, -root)};
}

std::pair<double, EquiDiag> equi_diagonalize(const Mat2& m) {
    const double y = m.d - m.a;
    const double x = m.b + m.c;
    const double j = 0.5 * (m.a + m.d);

    if (y == 0.0 && x == 0.0) {
        // Already equi-diagonal.
        return {0.0, EquiDiag{j, m.b, m.c}};
    }

    // Both delta and delta + pi equalize the diagonals; keep the atan2
    // branch when |atan2| <= pi/2 and fold by pi otherwise, so the sign
    // of the surd term in F, G follows the sign of B + C.
    double delta = std::atan2(y, x);
    long double sign = 1.0L;
    if (delta > 0.5 * M_PI) {
        delta -= M_PI;
        sign = -1.0L;
    } else if (delta < -0.5 * M_PI) {
        delta += M_PI;
        sign = -1.0L;
    }

    // B - C and the surd largely cancel on one side; long double keeps
    // the small off-diagonal accurate enough for the eta logarithm.
    const long double yl = static_cast<long double>(m.d) - m.a;
    const long double xl = static_cast<long double>(m.b) + m.c;
    const long double root = std::sqrt(yl * yl + xl * xl);
    const long double diff = static_cast<long double>(m.b) - m.c;
    const double f = static_cast<double>(0.5L * (diff + sign * root));
    const double g = static_cast<double>(0.5L * (-diff + sign * root));
    return {delta, EquiDiag{j, f, g}};
}

std::pair<double, WignerClass> wigner_factor(const EquiDiag& e,
                                             const Tolerances& tol) {
    const double j = e.j, f = e.f, g = e.g;

    if (j <= -(1.0 - tol.class_tol))
        throw DomainError("wigner_factor: J <= -1; negate the matrix first");

    if (std::fabs(j) < 1.0 - tol.class_tol) {
        // Opposite-sign off-diagonals: squeezed rotation.
        const double sin_star = std::copysign(std::sqrt((1.0 - j) * (1.0 + j)), g);
        const double theta_star = std::atan2(sin_star, j);
        const double eta = 0.5 * std::log(-f / g);
        return {eta, WignerClass::elliptic(theta_star)};
    }

    if (j > 1.0 + tol.class_tol) {
        // Same-sign off-diagonals: squeezed boost.
        const double lambda_star = std::copysign(std::acosh(j), f);
        const double eta = 0.5 * std::log(f / g);
        return {eta, WignerClass::hyperbolic(lambda_star)};
    }

    // |J| ~ 1: a shear, so one off-diagonal must vanish (J^2 - FG = 1
    // leaves no room for both to survive).  eta is not identifiable
    // here; fix eta = 0 and absorb the squeeze into gamma*.
    const bool f_zero = std::fabs(f) <= tol.parab_tol;
    const bool g_zero = std::fabs(g) <= tol.parab_tol;
    if (f_zero && g_zero) return {0.0, WignerClass::identity()};
    if (g_zero) return {0.0, WignerClass::parabolic_upper(-f)};
    if (f_zero) return {0.0, WignerClass::parabolic_lower(g)};
    throw DomainError("wigner_factor: |J| ~ 1 but neither off-diagonal vanishes"
                      " (input is not unit-determinant to working precision)");
}

Decomposition decompose(const Mat2& m, const Tolerances& tol) {
    Mat2 work = m;
    bool negated = false;
    // Negation region matches wigner_factor's rejection region exactly.
    if (0.5 * trace(m) <= -(1.0 - tol.class_tol)) {
        work = {-m.a, -m.b, -m.c, -m.d};
        negated = true;
    }
    auto [delta, ed] = equi_diagonalize(work);
    auto [eta, w] = wigner_factor(ed, tol);
    return {delta, eta, w, negated};
}

Mat2 reconstruct(const Decomposition& d, const Tolerances& tol) {
    const Mat2 r = rotation(0.5 * d.delta);
    const Mat2 q = squeeze(d.eta);
    Mat2 m = multiply(q, d.wigner.materialize(), tol);
    m = multiply(m, inverse(q), tol);
    m = multiply(r, m, tol);
    m = multiply(m, inverse(r), tol);
    if (d.negated) m = {-m.a, -m.b, -m.c, -m.d};
    return m;
}

WignerClass wigner_power(const WignerClass& w, std::int64_t n) {
    const double scale = static_cast<double>(n);
    switch (w.kind) {
        case WignerKind::Elliptic:
            return WignerClass::elliptic(wrap_pi(scale * w.param));
        case WignerKind::Hyperbolic:
            return n == 0 ? WignerClass::identity()
                          : WignerClass::hyperbolic(scale * w.param);
        case WignerKind::ParabolicUpper:
            return n == 0 ? WignerClass::identity()
                          : WignerClass::parabolic_upper(scale * w.param);
        case WignerKind::ParabolicLower:
            return n == 0 ? WignerClass::identity()
                          : WignerClass::parabolic_lower(scale * w.param);
        case WignerKind::Identity:
            return WignerClass::identity();
    }
    return WignerClass::identity();
}

Mat2 matrix_power(const Mat2& m, std::int64_t n, const Tolerances& tol) {
    constexpr std::int64_t kMaxExponent = std::int64_t{1} << 62;
    if (n > kMaxExponent || n < -kMaxExponent)
        throw DomainError("matrix_power: |n| must not exceed 2^62");
    Decomposition d = decompose(m, tol);
    d.wigner = wigner_power(d.wigner, n);
    d.negated = d.negated && (n % 2 != 0);
    return reconstruct(d, tol);
}

EquiDiag bargmann_compose(const BargmannForm& fm, const Tolerances& tol) {
    if (!(std::isfinite(fm.theta) && std::isfinite(fm.lambda)))
        throw DomainError("bargmann_compose: parameters must be finite");
    const double ch = std::cosh(fm.lambda), sh = std::sinh(fm.lambda);
    const double st = std::sin(fm.theta), ct = std::cos(fm.theta);
    return EquiDiag::make(ch * ct, -ch * st + sh, ch * st + sh, tol);
}

const char* to_string(WignerKind k) {
    switch (k) {
        case WignerKind::Elliptic: return "elliptic";
        case WignerKind::Hyperbolic: return "hyperbolic";
        case WignerKind::ParabolicUpper: return "parabolic_upper";
        case WignerKind::ParabolicLower: return "parabolic_lower";
        case WignerKind::Identity: return "identity";
    }
    return "identity";
}

const char* to_string(MatrixClass c) {
    switch (c) {
        case MatrixClass::Elliptic: return "elliptic";
        case MatrixClass::Hyperbolic: return "hyperbolic";
        case MatrixClass::Parabolic: return "parabolic";
        case MatrixClass::Identity: return "identity";
    }
    return "identity";
}

} // namespace sp2
