#include "sp2/oracle.hpp"

#include <cmath>
#include <cstdio>

namespace sp2::oracle {

namespace {

constexpr long double kOverflowLimit = 1e300L;

// The whole fold runs in long double and rounds once at the end, so the
// oracle's own drift stays well below that of the closed form it checks.
struct M2L {
    long double a, b, c, d;

    static M2L from(const Mat2& m) { return {m.a, m.b, m.c, m.d}; }

    Mat2 round() const {
        return {static_cast<double>(a), static_cast<double>(b),
                static_cast<double>(c), static_cast<double>(d)};
    }
};

M2L raw_multiply(const M2L& m1, const M2L& m2) {
    return {m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
            m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
}

void check_overflow(const M2L& m) {
    const long double s =
        std::fmax(std::fmax(std::fabs(m.a), std::fabs(m.b)),
                  std::fmax(std::fabs(m.c), std::fabs(m.d)));
    if (s > kOverflowLimit)
        throw OverflowError("brute_power: entry magnitude exceeded 1e300");
}

// Product of `count` copies of m, splitting pairwise so the rounding
// error tree stays O(log n) deep.
M2L pairwise_power(const M2L& m, std::int64_t count) {
    if (count == 1) return m;
    const std::int64_t half = count / 2;
    M2L left = pairwise_power(m, half);
    check_overflow(left);
    M2L right = pairwise_power(m, count - half);
    check_overflow(right);
    M2L p = raw_multiply(left, right);
    check_overflow(p);
    return p;
}

// splitmix64: the standard 64-bit finalizer chain; portable and stateless.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// k-th uniform [0, 1) variate of the (seed, index) stream.
double uniform01(std::uint64_t seed, std::uint64_t index, std::uint64_t k) {
    std::uint64_t x = splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
    x = splitmix64(x + k);
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

double uniform_range(std::uint64_t seed, std::uint64_t index, std::uint64_t k,
                     double lo, double hi) {
    return lo + (hi - lo) * uniform01(seed, index, k);
}

double random_sign(std::uint64_t seed, std::uint64_t index, std::uint64_t k) {
    return uniform01(seed, index, k) < 0.5 ? -1.0 : 1.0;
}

} // namespace

Mat2 brute_power(const Mat2& m, std::int64_t n) {
    if (n < 0) throw DomainError("brute_power: exponent must be nonnegative");
    if (n > 1000000) throw DomainError("brute_power: exponent capped at 1e6");
    if (n == 0) return Mat2::identity();
    const M2L base = M2L::from(m);
    if (n <= 1024) {
        M2L acc = base;
        for (std::int64_t i = 1; i < n; ++i) {
            check_overflow(acc);
            acc = raw_multiply(acc, base);
        }
        check_overflow(acc);
        return acc.round();
    }
    return pairwise_power(base, n).round();
}

Sp2Sampler::Sp2Sampler(std::uint64_t seed, double eta_max, ClassWeights weights)
    : seed_(seed), eta_max_(eta_max), weights_(weights) {
    if (!(eta_max > 0.0)) throw DomainError("Sp2Sampler: eta_max must be positive");
    total_weight_ = weights.elliptic + weights.hyperbolic + weights.parabolic +
                    weights.identity;
    if (!(total_weight_ > 0.0))
        throw DomainError("Sp2Sampler: class weights must not all vanish");
}

Decomposition Sp2Sampler::draw_decomposition(std::uint64_t index) const {
    Decomposition d;
    d.delta = uniform_range(seed_, index, 0, -0.5 * M_PI, 0.5 * M_PI);
    d.eta = uniform_range(seed_, index, 1, -eta_max_, eta_max_);

    const double pick = uniform01(seed_, index, 2) * total_weight_;
    const double sign = random_sign(seed_, index, 3);
    const double u = uniform01(seed_, index, 4);

    if (pick < weights_.elliptic) {
        d.wigner = WignerClass::elliptic(sign * (1e-3 + u * (M_PI - 2e-3)));
    } else if (pick < weights_.elliptic + weights_.hyperbolic) {
        d.wigner = WignerClass::hyperbolic(sign * (1e-3 + u * (0.6 - 1e-3)));
    } else if (pick < weights_.elliptic + weights_.hyperbolic + weights_.parabolic) {
        const double gamma = sign * (1e-3 + u * (5.0 - 1e-3));
        d.wigner = uniform01(seed_, index, 5) < 0.5
                       ? WignerClass::parabolic_upper(gamma)
                       : WignerClass::parabolic_lower(gamma);
        d.eta = 0.0; // canonical parabolic representative
    } else {
        d.wigner = WignerClass::identity();
        d.eta = 0.0;
    }
    return d;
}

Mat2 Sp2Sampler::draw(std::uint64_t index) const {
    return reconstruct(draw_decomposition(index));
}

Mat2 random_sp2(std::uint64_t seed, double eta_max, ClassWeights weights) {
    return Sp2Sampler(seed, eta_max, weights).draw(0);
}

ComparisonReport compare(const Mat2& closed, const Mat2& brute, double rel_tol,
                         double abs_tol) {
    ComparisonReport rep;
    rep.n_trials = 1;
    rep.max_abs_err = max_abs_diff(closed, brute);
    // Normwise relative error: entrywise relative bounds are ill-posed for
    // entries far below the matrix scale, where rounding from either route
    // lands at scale * eps regardless of the entry's own size.
    const double scale = std::fmax(std::fmax(max_abs(closed), max_abs(brute)), 1e-300);
    rep.max_rel_err = rep.max_abs_err / scale;
    rep.passed = rep.max_abs_err <= abs_tol || rep.max_rel_err <= rel_tol;
    return rep;
}

ComparisonReport verify_powers(const Sp2Sampler& sampler, std::int64_t trials,
                               const std::int64_t* n_list, std::size_t n_count,
                               double rel_tol, double abs_tol,
                               double loose_abs_tol, const Tolerances& tol) {
    ComparisonReport total;
    total.n_trials = 0;
    double worst = -1.0;
    bool overflow_noted = false;
    for (std::int64_t i = 0; i < trials; ++i) {
        const Mat2 m = sampler.draw(static_cast<std::uint64_t>(i));
        for (std::size_t k = 0; k < n_count; ++k) {
            const std::int64_t n = n_list[k];
            Mat2 closed, brute;
            ++total.n_trials;
            try {
                closed = matrix_power(m, n, tol);
                brute = brute_power(m, n);
            } catch (const Error&) {
                // Overflow or conditioning breakdown: an honest failure,
                // reported rather than silently skipped.
                total.passed = false;
                if (!overflow_noted) {
                    char buf[160];
                    std::snprintf(buf, sizeof buf,
                                  "overflow/conditioning failure at trial %lld n %lld",
                                  static_cast<long long>(i), static_cast<long long>(n));
                    total.worst_case = buf;
                    overflow_noted = true;
                }
                continue;
            }
            const double scale = std::fmax(max_abs(closed), max_abs(brute));
            const double abs_band = scale > 1e6 ? loose_abs_tol : abs_tol;
            const ComparisonReport rep = compare(closed, brute, rel_tol, abs_band);
            total.max_abs_err = std::fmax(total.max_abs_err, rep.max_abs_err);
            total.max_rel_err = std::fmax(total.max_rel_err, rep.max_rel_err);
            if (!rep.passed) total.passed = false;
            const double badness = rep.passed ? rep.max_rel_err : 1.0 + rep.max_rel_err;
            if (!overflow_noted && badness > worst) {
                worst = badness;
                char buf[200];
                std::snprintf(buf, sizeof buf,
                              "trial %lld n %lld m [%.17g %.17g %.17g %.17g]",
                              static_cast<long long>(i), static_cast<long long>(n),
                              m.a, m.b, m.c, m.d);
                total.worst_case = buf;
            }
        }
    }
    return total;
}

} // namespace sp2::oracle
