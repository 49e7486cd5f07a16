#pragma once

// Independent oracles used across the test suites. Everything here is kept
// deliberately naive (dense grids, brute-force enumeration, plain Simpson
// sums) and shares no code with the library paths it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "depthrank/linalg.hpp"

namespace oracles {

// Composite Simpson integration on [a, b] with n (even) panels.
template <typename F>
double simpson(F f, double a, double b, int n = 20000) {
    if (n % 2 == 1) ++n;
    double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
    return s * h / 3.0;
}

inline double gauss_density(double t) {
    return std::exp(-0.5 * t * t) / std::sqrt(2.0 * 3.14159265358979323846);
}

// Normal cdf by quadrature of the density from 0 to x.
inline double normal_cdf_quadrature(double x) {
    if (x < 0.0) return 0.5 - simpson(gauss_density, x, 0.0);
    return 0.5 + simpson(gauss_density, 0.0, x);
}

// Upper normal tail by the continued fraction for the Mills ratio,
// accurate for x >= 4.
inline double normal_upper_tail_cf(double x) {
    double cf = 0.0;
    for (int k = 60; k >= 1; --k) cf = k / (x + cf);
    return gauss_density(x) / (x + cf);
}

// Inverts a monotone cdf by bisection.
template <typename F>
double bisect_quantile(F cdf, double p, double lo, double hi, int iters = 200) {
    for (int i = 0; i < iters; ++i) {
        double mid = 0.5 * (lo + hi);
        if (cdf(mid) < p) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Halfspace depth in the plane by brute force: minimises the closed
// halfplane count over a dense angular grid plus every data-derived critical
// angle and the midpoints between consecutive criticals.
inline double halfspace_depth_2d_bruteforce(std::span<const double> x,
                                            const depthrank::Sample& ref,
                                            int grid = 3600) {
    const std::size_t m = ref.rows();
    const double pi = 3.14159265358979323846;
    std::vector<double> angles;
    angles.reserve(2 * m + grid);
    for (std::size_t i = 0; i < m; ++i) {
        double vx = ref(i, 0) - x[0], vy = ref(i, 1) - x[1];
        if (vx == 0.0 && vy == 0.0) continue;
        double a = std::atan2(vy, vx);
        angles.push_back(a - 0.5 * pi);
        angles.push_back(a + 0.5 * pi);
    }
    std::sort(angles.begin(), angles.end());
    std::vector<double> probe = angles;
    for (std::size_t i = 0; i + 1 < angles.size(); ++i)
        probe.push_back(0.5 * (angles[i] + angles[i + 1]));
    if (!angles.empty())
        probe.push_back(0.5 * (angles.back() + angles.front() + 2.0 * pi));
    for (int g = 0; g < grid; ++g) probe.push_back(2.0 * pi * g / grid);

    long best = static_cast<long>(m);
    for (double phi : probe) {
        double ux = std::cos(phi), uy = std::sin(phi);
        long cnt = 0;
        for (std::size_t i = 0; i < m; ++i) {
            double vx = ref(i, 0) - x[0], vy = ref(i, 1) - x[1];
            if (ux * vx + uy * vy >= 0.0) ++cnt;
        }
        best = std::min(best, cnt);
    }
    return static_cast<double>(best) / static_cast<double>(m);
}

inline double median_naive(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    if (n % 2 == 1) return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Projected (Med, MAD) outlyingness maximised over an explicit direction
// list; a lower bound on the true supremum.
inline double projection_outlyingness_over_dirs(std::span<const double> x,
                                                const depthrank::Sample& ref,
                                                const std::vector<std::pair<double, double>>& dirs) {
    const std::size_t m = ref.rows();
    double best = 0.0;
    std::vector<double> proj(m), dev(m);
    for (auto [ux, uy] : dirs) {
        for (std::size_t i = 0; i < m; ++i) proj[i] = ux * ref(i, 0) + uy * ref(i, 1);
        double med = median_naive(proj);
        for (std::size_t i = 0; i < m; ++i) dev[i] = std::fabs(proj[i] - med);
        double mad = median_naive(dev);
        if (mad <= 0.0) continue;
        double v = std::fabs(ux * x[0] + uy * x[1] - med) / mad;
        best = std::max(best, v);
    }
    return best;
}

// Mann-Whitney count #{(i,j): x_i <= y_j} by direct enumeration.
inline long long mann_whitney_count(const std::vector<double>& x,
                                    const std::vector<double>& y) {
    long long c = 0;
    for (double xi : x)
        for (double yj : y)
            if (xi <= yj) ++c;
    return c;
}

// Kolmogorov-Smirnov distance between a sample and U[0,1].
inline double ks_distance_uniform(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const double n = static_cast<double>(v.size());
    double d = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        double fe_lo = static_cast<double>(i) / n;
        double fe_hi = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(std::fabs(v[i] - fe_lo), std::fabs(v[i] - fe_hi)));
    }
    return d;
}

} // namespace oracles
