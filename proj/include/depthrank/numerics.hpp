#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "depthrank/errors.hpp"

// Scalar special functions: standard normal cdf/quantile, central and
// noncentral chi-square. Everything here is dimension-free plumbing used by
// the test statistics and the analytic power formulas.

namespace depthrank {

inline constexpr double kPi = 3.14159265358979323846;

inline double std_normal_pdf(double x) {
    static const double inv_sqrt_2pi = 0.39894228040143267794;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

// Phi(x) via the complementary error function; |error| < 1e-14 over the
// double range, saturating to 0/1 in the far tails.
inline double std_normal_cdf(double x) {
    return 0.5 * std::erfc(-x / 1.41421356237309504880);
}

// Inverse of std_normal_cdf. Acklam's rational approximation refined by two
// Halley steps, giving ~1e-15 accuracy on (0,1).
inline double std_normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("std_normal_quantile: p must lie in (0,1), got " +
                                std::to_string(p));

    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};

    const double plow = 0.02425;
    double x;
    if (p < plow) {
        double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        double q = p - 0.5;
        double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    // Halley refinement against the cdf.
    for (int it = 0; it < 2; ++it) {
        double e = std_normal_cdf(x) - p;
        double u = e / std_normal_pdf(x);
        x -= u / (1.0 + 0.5 * x * u);
    }
    return x;
}

namespace detail {

// Regularized lower incomplete gamma P(a,x) by its power series.
inline double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw numeric_error("incomplete gamma series failed to converge");
}

// Regularized upper incomplete gamma Q(a,x) by modified Lentz continued
// fraction; valid for x > a+1 where the series converges slowly.
inline double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw numeric_error("incomplete gamma continued fraction failed to converge");
}

} // namespace detail

// Regularized lower incomplete gamma P(a,x).
inline double gamma_p(double a, double x) {
    if (a <= 0.0) throw std::domain_error("gamma_p: a must be positive");
    if (x < 0.0) throw std::domain_error("gamma_p: x must be nonnegative");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return detail::gamma_p_series(a, x);
    return 1.0 - detail::gamma_q_cf(a, x);
}

inline double gamma_q(double a, double x) {
    if (a <= 0.0) throw std::domain_error("gamma_q: a must be positive");
    if (x < 0.0) throw std::domain_error("gamma_q: x must be nonnegative");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
    return detail::gamma_q_cf(a, x);
}

inline double chisq_cdf(double x, int df) {
    if (df < 1) throw std::domain_error("chisq_cdf: df must be >= 1");
    if (x <= 0.0) return 0.0;
    return gamma_p(0.5 * df, 0.5 * x);
}

inline double chisq_sf(double x, int df) {
    if (df < 1) throw std::domain_error("chisq_sf: df must be >= 1");
    if (x <= 0.0) return 1.0;
    return gamma_q(0.5 * df, 0.5 * x);
}

inline double chisq_pdf(double x, int df) {
    if (x <= 0.0) return 0.0;
    double a = 0.5 * df;
    return std::exp((a - 1.0) * std::log(x) - 0.5 * x - a * std::log(2.0) -
                    std::lgamma(a));
}

// Quantile of the central chi-square law. Wilson-Hilferty start, Newton
// iterations, bisection fallback; the returned x satisfies
// |chisq_cdf(x,df) - p| < 1e-12.
inline double chisq_quantile(double p, int df) {
    if (df < 1) throw std::domain_error("chisq_quantile: df must be >= 1");
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("chisq_quantile: p must lie in (0,1), got " +
                                std::to_string(p));

    double z = std_normal_quantile(p);
    double t = 1.0 - 2.0 / (9.0 * df) + z * std::sqrt(2.0 / (9.0 * df));
    double x = df * t * t * t;
    if (x <= 0.0) x = 1e-8;

    double lo = 0.0, hi = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 200; ++it) {
        double f = chisq_cdf(x, df) - p;
        if (f > 0.0) hi = x; else lo = x;
        if (std::fabs(f) < 1e-13) break;
        double dens = chisq_pdf(x, df);
        double step = (dens > 0.0) ? f / dens : 0.0;
        double xn = x - step;
        if (!(xn > lo && (xn < hi))) // Newton left the bracket
            xn = std::isinf(hi) ? 2.0 * x : 0.5 * (lo + hi);
        if (std::fabs(xn - x) < 1e-14 * (1.0 + x)) { x = xn; break; }
        x = xn;
    }
    return x;
}

// Survival function of the noncentral chi-square law: a Poisson(ncp/2)
// mixture of central chi-square survival terms. The series is truncated once
// the remaining Poisson tail weight drops below 1e-13, which bounds the
// absolute truncation error by the same amount.
inline double noncentral_chisq_sf(double x, int df, double ncp) {
    if (df < 1) throw std::domain_error("noncentral_chisq_sf: df must be >= 1");
    if (ncp < 0.0)
        throw std::domain_error("noncentral_chisq_sf: noncentrality must be >= 0");
    if (x < 0.0) throw std::domain_error("noncentral_chisq_sf: x must be >= 0");
    if (x == 0.0) return 1.0;
    if (ncp == 0.0) return chisq_sf(x, df);

    const double lambda = 0.5 * ncp;
    const double a0 = 0.5 * df;
    const double y = 0.5 * x;

    double pois = std::exp(-lambda);       // Poisson(lambda) weight at k
    double cum_pois = pois;
    double q = gamma_q(a0, y);             // Q(a0 + k, y) at k = 0
    double term_t = std::exp(a0 * std::log(y) - y - std::lgamma(a0 + 1.0));
    double sum = pois * q;

    for (std::int64_t k = 0; k < 100000; ++k) {
        if (1.0 - cum_pois < 1e-13 && k >= lambda) break;
        q += term_t;                        // Q(a+1,y) = Q(a,y) + y^a e^-y / Gamma(a+1)
        term_t *= y / (a0 + static_cast<double>(k) + 1.0);
        pois *= lambda / static_cast<double>(k + 1);
        cum_pois += pois;
        sum += pois * q;
    }
    if (sum < 0.0) sum = 0.0;
    if (sum > 1.0) sum = 1.0;
    return sum;
}

inline double noncentral_chisq_cdf(double x, int df, double ncp) {
    double c = 1.0 - noncentral_chisq_sf(x, df, ncp);
    if (c < 0.0) c = 0.0;
    return c;
}

} // namespace depthrank
