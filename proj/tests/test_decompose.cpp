#include <doctest.h>

#include <cmath>

#include "sp2/decompose.hpp"
#include "sp2/oracle.hpp"

using namespace sp2;

namespace {

// Independent conjugation oracle: R(-delta/2) m R(delta/2) by explicit
// products, used to cross-check equi_diagonalize output.
Mat2 conjugate_by_rotation(const Mat2& m, double delta) {
    return multiply(multiply(rotation(-0.5 * delta), m), rotation(0.5 * delta));
}

} // namespace

TEST_CASE("classify follows the trace trichotomy") {
    CHECK(classify(rotation(0.3)) == MatrixClass::Elliptic);

    // diag(e, 1/e): J = (e + 1/e)/2 = cosh 1
    const double e = std::exp(1.0);
    const Mat2 boost_diag{e, 0, 0, 1.0 / e};
    CHECK(classify(boost_diag) == MatrixClass::Hyperbolic);
    CHECK(0.5 * trace(boost_diag) == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));

    CHECK(classify({1, 5, 0, 1}) == MatrixClass::Parabolic);
    CHECK(classify(Mat2::identity()) == MatrixClass::Identity);
    CHECK(classify({-1, 0, 0, -1}) == MatrixClass::Identity);
}

TEST_CASE("eigenvalues: unit product and class-specific structure") {
    SUBCASE("rotation has e^{+-i theta}") {
        const double t = 0.7;
        auto [ep, em] = eigenvalues(rotation(t));
        CHECK(ep.real() == doctest::Approx(std::cos(t)));
        CHECK(ep.imag() == doctest::Approx(std::sin(t)));
        CHECK(std::abs(ep * em - 1.0) < 1e-9);
        CHECK(std::abs(ep) == doctest::Approx(1.0));
    }
    SUBCASE("diagonal boost has (e, 1/e)") {
        const double e = std::exp(1.0);
        auto [ep, em] = eigenvalues({e, 0, 0, 1.0 / e});
        CHECK(ep.imag() == 0.0);
        CHECK(ep.real() == doctest::Approx(e));
        CHECK(em.real() == doctest::Approx(1.0 / e));
    }
    SUBCASE("shear is degenerate at 1") {
        auto [ep, em] = eigenvalues({1, 5, 0, 1});
        CHECK(ep.real() == doctest::Approx(1.0));
        CHECK(em.real() == doctest::Approx(1.0));
        CHECK(ep.imag() == 0.0);
    }
}

TEST_CASE("equi_diagonalize: worked examples") {
    SUBCASE("identity stays put") {
        auto [delta, ed] = equi_diagonalize(Mat2::identity());
        CHECK(delta == 0.0);
        CHECK(ed.j == 1.0);
        CHECK(ed.f == 0.0);
        CHECK(ed.g == 0.0);
    }
    SUBCASE("[[1,1],[-1,0]] rotates by delta = -pi/2") {
        const Mat2 m{1, 1, -1, 0};
        auto [delta, ed] = equi_diagonalize(m);
        CHECK(delta == doctest::Approx(-0.5 * M_PI));
        CHECK(ed.j == doctest::Approx(0.5));
        CHECK(ed.f == doctest::Approx(1.5));
        CHECK(ed.g == doctest::Approx(-0.5));
        CHECK(ed.j * ed.j - ed.f * ed.g == doctest::Approx(1.0));

        // Cross-check against the explicit conjugation.
        const Mat2 n = conjugate_by_rotation(m, delta);
        CHECK(std::fabs(n.a - n.d) < 1e-10);
        CHECK(max_abs_diff(n, ed.materialize()) < 1e-12);
    }
    SUBCASE("rotations are already equi-diagonal") {
        const double t = 1.1;
        auto [delta, ed] = equi_diagonalize(rotation(t));
        CHECK(delta == 0.0);
        CHECK(ed.j == doctest::Approx(std::cos(t)));
        CHECK(ed.f == doctest::Approx(-std::sin(t)));
        CHECK(ed.g == doctest::Approx(std::sin(t)));
    }
}

TEST_CASE("equi_diagonalize equalizes diagonals and preserves trace") {
    oracle::Sp2Sampler sampler(7);
    for (std::uint64_t i = 0; i < 500; ++i) {
        const Mat2 m = sampler.draw(i);
        auto [delta, ed] = equi_diagonalize(m);
        CHECK(ed.j == 0.5 * (m.a + m.d)); // trace passes through untouched
        const Mat2 n = conjugate_by_rotation(m, delta);
        CHECK(std::fabs(n.a - n.d) <= 1e-10 * (1.0 + max_abs(m)));
        CHECK(max_abs_diff(n, ed.materialize()) < 1e-9 * (1.0 + max_abs(m)));
        CHECK(delta > -0.5 * M_PI - 1e-15);
        CHECK(delta <= 0.5 * M_PI + 1e-15);
    }
}

TEST_CASE("wigner_factor: worked examples") {
    SUBCASE("elliptic core (1/2, 3/2, -1/2)") {
        auto [eta, w] = wigner_factor(EquiDiag::make(0.5, 1.5, -0.5));
        CHECK(w.kind == WignerKind::Elliptic);
        CHECK(w.param == doctest::Approx(-M_PI / 3.0));
        CHECK(eta == doctest::Approx(0.5 * std::log(3.0)));

        // Q(eta) W Q(eta)^{-1} must rebuild the input.
        const Mat2 q = squeeze(eta);
        const Mat2 back = multiply(multiply(q, w.materialize()), inverse(q));
        CHECK(max_abs_diff(back, Mat2{0.5, 1.5, -0.5, 0.5}) < 1e-10);
    }
    SUBCASE("already a boost") {
        auto [eta, w] =
            wigner_factor(EquiDiag::make(std::cosh(1.0), std::sinh(1.0), std::sinh(1.0)));
        CHECK(w.kind == WignerKind::Hyperbolic);
        CHECK(w.param == doctest::Approx(1.0));
        CHECK(eta == doctest::Approx(0.0));
    }
    SUBCASE("upper shear (1, 5, 0)") {
        auto [eta, w] = wigner_factor(EquiDiag::make(1.0, 5.0, 0.0));
        CHECK(w.kind == WignerKind::ParabolicUpper);
        CHECK(w.param == doctest::Approx(-5.0));
        CHECK(eta == 0.0);
    }
    SUBCASE("negative-trace input is the caller's responsibility") {
        CHECK_THROWS_AS(wigner_factor(EquiDiag::make(-2.0, 1.0, 3.0)), DomainError);
    }
    SUBCASE("inconsistent near-parabolic core is rejected") {
        CHECK_THROWS_AS(wigner_factor(EquiDiag{1.0, 0.5, -0.5}), DomainError);
    }
}

TEST_CASE("decompose: worked examples") {
    SUBCASE("identity") {
        const Decomposition d = decompose(Mat2::identity());
        CHECK(d.delta == 0.0);
        CHECK(d.eta == 0.0);
        CHECK(d.wigner.kind == WignerKind::Identity);
        CHECK_FALSE(d.negated);
    }
    SUBCASE("[[1,1],[-1,0]]") {
        const Decomposition d = decompose(Mat2{1, 1, -1, 0});
        CHECK(d.delta == doctest::Approx(-0.5 * M_PI));
        CHECK(d.eta == doctest::Approx(0.5 * std::log(3.0)));
        CHECK(d.wigner.kind == WignerKind::Elliptic);
        CHECK(d.wigner.param == doctest::Approx(-M_PI / 3.0));
        CHECK_FALSE(d.negated);
        CHECK(max_abs_diff(reconstruct(d), Mat2{1, 1, -1, 0}) < 1e-12);
    }
    SUBCASE("-identity flips the sign flag") {
        const Decomposition d = decompose(Mat2{-1, 0, 0, -1});
        CHECK(d.delta == 0.0);
        CHECK(d.eta == 0.0);
        CHECK(d.wigner.kind == WignerKind::Identity);
        CHECK(d.negated);
    }
}

TEST_CASE("reconstruct: worked examples") {
    CHECK(max_abs_diff(reconstruct({0.0, 0.0, WignerClass::identity(), false}),
                       Mat2::identity()) == 0.0);

    const Decomposition d{-0.5 * M_PI, 0.5 * std::log(3.0),
                          WignerClass::elliptic(-M_PI / 3.0), false};
    CHECK(max_abs_diff(reconstruct(d), Mat2{1, 1, -1, 0}) < 1e-12);

    // Squeezed boost: [[cosh l, e^eta sinh l], [e^{-eta} sinh l, cosh l]].
    const double l = 0.8, eta = 1.3;
    const Mat2 m = reconstruct({0.0, eta, WignerClass::hyperbolic(l), false});
    CHECK(m.a == doctest::Approx(std::cosh(l)));
    CHECK(m.b == doctest::Approx(std::exp(eta) * std::sinh(l)));
    CHECK(m.c == doctest::Approx(std::exp(-eta) * std::sinh(l)));
    CHECK(m.d == doctest::Approx(std::cosh(l)));
}

TEST_CASE("round trip reconstruct(decompose(m)) over all classes") {
    oracle::Sp2Sampler sampler(123, 5.0);
    for (std::uint64_t i = 0; i < 2000; ++i) {
        const Mat2 m = sampler.draw(i);
        const Mat2 back = reconstruct(decompose(m));
        CHECK(max_abs_diff(back, m) < 1e-9);
    }
}

TEST_CASE("negative-trace matrices round trip through the negation flag") {
    oracle::Sp2Sampler sampler(321, 3.0);
    for (std::uint64_t i = 0; i < 500; ++i) {
        const Mat2 base = sampler.draw(i);
        const Mat2 m{-base.a, -base.b, -base.c, -base.d};
        const Decomposition d = decompose(m);
        CHECK(max_abs_diff(reconstruct(d), m) < 1e-9);
    }
}

TEST_CASE("wigner_power scales parameters") {
    SUBCASE("elliptic powers rotate N times") {
        const double t = 0.31;
        const WignerClass w6 = wigner_power(WignerClass::elliptic(t), 6);
        CHECK(max_abs_diff(w6.materialize(), rotation(6.0 * t)) < 1e-12);
    }
    SUBCASE("shears add") {
        const WignerClass w = wigner_power(WignerClass::parabolic_upper(0.4), 3);
        CHECK(w.kind == WignerKind::ParabolicUpper);
        CHECK(w.param == doctest::Approx(1.2));
    }
    SUBCASE("negative power inverts") {
        const WignerClass inv = wigner_power(WignerClass::hyperbolic(1.0), -1);
        CHECK(inv.param == doctest::Approx(-1.0));
        const Mat2 prod =
            multiply(inv.materialize(), WignerClass::hyperbolic(1.0).materialize());
        CHECK(max_abs_diff(prod, Mat2::identity()) < 1e-12);
    }
    SUBCASE("zero power is the identity") {
        CHECK(wigner_power(WignerClass::hyperbolic(2.0), 0).kind == WignerKind::Identity);
        CHECK(wigner_power(WignerClass::parabolic_lower(2.0), 0).kind ==
              WignerKind::Identity);
    }
}

TEST_CASE("logarithmic property: W(p1) W(p2) = W(p1 + p2) per class") {
    const double p1 = 0.61, p2 = -1.13;
    const WignerClass families[4] = {
        WignerClass::elliptic(p1), WignerClass::hyperbolic(p1),
        WignerClass::parabolic_upper(p1), WignerClass::parabolic_lower(p1)};
    for (const WignerClass& w1 : families) {
        WignerClass w2 = w1;
        w2.param = p2;
        WignerClass sum = w1;
        sum.param = w1.kind == WignerKind::Elliptic ? wrap_pi(p1 + p2) : p1 + p2;
        CHECK(max_abs_diff(multiply(w1.materialize(), w2.materialize()),
                           sum.materialize()) < 1e-10);
    }
}

TEST_CASE("matrix_power: worked examples") {
    SUBCASE("identity to any power") {
        const Mat2 p = matrix_power(Mat2::identity(), 1000000000LL);
        CHECK(max_abs_diff(p, Mat2::identity()) == 0.0);
    }
    SUBCASE("[[1,1],[-1,0]]^6 closes the hexagon") {
        const Mat2 m{1, 1, -1, 0};
        CHECK(max_abs_diff(matrix_power(m, 6), oracle::brute_power(m, 6)) < 1e-12);
        CHECK(max_abs_diff(matrix_power(m, 6), Mat2::identity()) < 1e-9);
    }
    SUBCASE("shear powers accumulate gamma") {
        const Mat2 m{1, 0.5, 0, 1};
        const Mat2 p = matrix_power(m, 8);
        CHECK(p.a == doctest::Approx(1.0));
        CHECK(p.b == doctest::Approx(4.0));
        CHECK(p.c == doctest::Approx(0.0));
        CHECK(p.d == doctest::Approx(1.0));
    }
    SUBCASE("negated matrices pick up sign^n") {
        const Mat2 m{-1, -0.5, 0, -1};
        CHECK(max_abs_diff(matrix_power(m, 2), oracle::brute_power(m, 2)) < 1e-12);
        CHECK(max_abs_diff(matrix_power(m, 3), oracle::brute_power(m, 3)) < 1e-12);
    }
    SUBCASE("negative exponent is the power of the inverse") {
        const Mat2 m{1, 1, -1, 0};
        const Mat2 p = matrix_power(m, -5);
        const Mat2 q = oracle::brute_power(inverse(m), 5);
        CHECK(max_abs_diff(p, q) < 1e-12);
    }
    SUBCASE("exponents beyond 2^62 are rejected") {
        CHECK_THROWS_AS(matrix_power(Mat2::identity(), (std::int64_t{1} << 62) + 1),
                        DomainError);
    }
}

TEST_CASE("matrix_power agrees with brute force over random draws") {
    oracle::Sp2Sampler sampler(99, 5.0);
    const std::int64_t ns[] = {2, 3, 7, 64, 1000};
    for (std::uint64_t i = 0; i < 300; ++i) {
        const Mat2 m = sampler.draw(i);
        for (std::int64_t n : ns) {
            const Mat2 closed = matrix_power(m, n);
            const Mat2 brute = oracle::brute_power(m, n);
            const double scale = std::fmax(max_abs(closed), max_abs(brute));
            const auto rep =
                oracle::compare(closed, brute, 1e-8, scale > 1e6 ? 1e-6 : 1e-9);
            CHECK(rep.passed);
        }
    }
}

TEST_CASE("determinant is preserved across operations") {
    oracle::Sp2Sampler sampler(2718, 5.0);
    for (std::uint64_t i = 0; i < 500; ++i) {
        const Mat2 m = sampler.draw(i);
        CHECK(std::fabs(det(m) - 1.0) <= 1e-9);
        CHECK(std::fabs(det(reconstruct(decompose(m))) - 1.0) <= 1e-9);
        CHECK(std::fabs(det(matrix_power(m, 7)) - 1.0) <=
              detail::det_band(max_abs(matrix_power(m, 7)), 1e-9));
    }
}
