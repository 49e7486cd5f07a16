#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "depthrank/linalg.hpp"
#include "depthrank/numerics.hpp"
#include "depthrank/rng.hpp"

// The two competitor tests of the power study: Hotelling's two-sample T^2
// with its chi-square calibration, and the Oja rank test built from
// sign-weighted determinant cofactors over d-point subsets of the pooled
// sample.

namespace depthrank {

struct TestReport {
    double statistic = 0.0;
    int df = 0;
    double p_value = 1.0;
    bool reject = false;
    double alpha = 0.05;
    std::string mode = "exact";
};

// T^2 = (Xbar - Ybar)' [(1/m + 1/n) S_pooled]^-1 (Xbar - Ybar), rejected
// against the chi-square(d) upper quantile.
inline TestReport hotelling_t2_test(const Sample& x, const Sample& y, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("hotelling_t2_test: alpha must lie in (0,1)");
    if (x.cols() != y.cols())
        throw data_error("hotelling_t2_test: sample dimensions differ");
    const std::size_t d = x.cols();
    const std::size_t m = x.rows(), n = y.rows();
    if (m + n < d + 2)
        throw data_error("hotelling_t2_test: need m + n >= d + 2 observations");
    if (m < 2 || n < 2)
        throw data_error("hotelling_t2_test: each sample needs at least 2 rows");

    auto [mx, sx] = sample_mean_cov(x);
    auto [my, sy] = sample_mean_cov(y);

    Matrix pooled(d, d);
    double denom = static_cast<double>(m + n - 2);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            pooled(i, j) = ((m - 1) * sx(i, j) + (n - 1) * sy(i, j)) / denom;

    double scale = 1.0 / static_cast<double>(m) + 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) pooled(i, j) *= scale;

    Matrix inv;
    try {
        inv = invert(pooled);
    } catch (const numeric_error&) {
        throw numeric_error(
            "hotelling_t2_test: pooled covariance is singular; "
            "collect more observations or reduce the dimension");
    }

    Vector diff(d);
    for (std::size_t j = 0; j < d; ++j) diff[j] = mx[j] - my[j];

    TestReport rep;
    rep.statistic = quad_form(diff, inv, diff);
    rep.df = static_cast<int>(d);
    rep.alpha = alpha;
    rep.p_value = chisq_sf(rep.statistic, rep.df);
    rep.reject = rep.statistic > chisq_quantile(1.0 - alpha, rep.df);
    rep.mode = "exact";
    return rep;
}

struct OjaConfig {
    enum class Mode { exact, subset_sampled };
    Mode mode = Mode::exact;
    long n_subsets = 200000;             // subset_sampled
    long enumeration_budget = 2000000;   // exact: cap on C(N, d)
    std::uint64_t seed = 0x0A11CE5EEDull; // subset_sampled
};

namespace detail {

inline double binomial_count(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    double c = 1.0;
    for (std::size_t i = 0; i < k; ++i)
        c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return c;
}

inline double sign_of(double t) { return (t > 0.0) - (t < 0.0); }

// Cofactors of det[[1 ... 1 1], [z_{i_1} ... z_{i_d} z]] expanded along the
// last column (1, z)': the determinant equals n0 + z'np.
struct SubsetCofactors {
    double n0 = 0.0;
    Vector np;
};

inline SubsetCofactors subset_cofactors(const Sample& pooled,
                                        const std::vector<std::size_t>& p) {
    const std::size_t d = pooled.cols();
    SubsetCofactors cof;
    cof.np.assign(d, 0.0);
    if (d == 1) {
        cof.n0 = -pooled(p[0], 0);
        cof.np[0] = 1.0;
        return cof;
    }
    if (d == 2) {
        double a1 = pooled(p[0], 0), a2 = pooled(p[0], 1);
        double b1 = pooled(p[1], 0), b2 = pooled(p[1], 1);
        cof.n0 = a1 * b2 - a2 * b1;
        cof.np[0] = a2 - b2;
        cof.np[1] = b1 - a1;
        return cof;
    }
    // General d: minors of the (d+1)x(d+1) matrix along its last column.
    Matrix minor(d, d);
    for (std::size_t r = 0; r <= d; ++r) {
        std::size_t mr = 0;
        for (std::size_t row = 0; row <= d; ++row) {
            if (row == r) continue;
            for (std::size_t c = 0; c < d; ++c)
                minor(mr, c) = (row == 0) ? 1.0 : pooled(p[c], row - 1);
            ++mr;
        }
        double sgn = ((r + d) % 2 == 0) ? 1.0 : -1.0;
        double det = determinant(minor);
        if (r == 0) cof.n0 = sgn * det;
        else cof.np[r - 1] = sgn * det;
    }
    return cof;
}

template <typename Fn>
inline void for_each_subset(std::size_t n, std::size_t d, Fn&& fn) {
    std::vector<std::size_t> p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = i;
    while (true) {
        fn(p);
        std::size_t i = d;
        while (i-- > 0) {
            if (p[i] != i + n - d) {
                ++p[i];
                for (std::size_t j = i + 1; j < d; ++j) p[j] = p[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

} // namespace detail

// Oja rank vector of a single point against a pooled sample: the average
// over d-point subsets of sign(n0 + z'np) * np. Exact mode enumerates all
// C(N, d) subsets; sampled mode averages over uniformly drawn subsets.
inline Vector oja_rank_vector(std::span<const double> z, const Sample& pooled,
                              const OjaConfig& cfg) {
    const std::size_t N = pooled.rows();
    const std::size_t d = pooled.cols();
    if (z.size() != d) throw data_error("oja_rank_vector: dimension mismatch");
    if (N < d + 1)
        throw data_error("oja_rank_vector: pooled sample needs at least d+1 rows");

    Vector acc(d, 0.0);
    double count = 0.0;
    auto add = [&](const std::vector<std::size_t>& p) {
        auto cof = detail::subset_cofactors(pooled, p);
        double t = cof.n0;
        for (std::size_t j = 0; j < d; ++j) t += z[j] * cof.np[j];
        double s = detail::sign_of(t);
        for (std::size_t j = 0; j < d; ++j) acc[j] += s * cof.np[j];
        count += 1.0;
    };

    if (cfg.mode == OjaConfig::Mode::exact) {
        if (detail::binomial_count(N, d) > static_cast<double>(cfg.enumeration_budget))
            throw unsupported_error(
                "oja_rank_vector: C(N,d) exceeds the exact enumeration budget; "
                "use subset-sampled mode");
        detail::for_each_subset(N, d, add);
    } else {
        if (cfg.n_subsets < 1)
            throw std::domain_error("oja_rank_vector: n_subsets must be >= 1");
        RngStream rng(cfg.seed, 0);
        std::vector<std::size_t> p(d);
        for (long s = 0; s < cfg.n_subsets; ++s) {
            for (std::size_t i = 0; i < d; ++i) {
                bool fresh;
                do {
                    p[i] = rng.next_below(N);
                    fresh = true;
                    for (std::size_t j = 0; j < i; ++j)
                        if (p[j] == p[i]) { fresh = false; break; }
                } while (!fresh);
            }
            add(p);
        }
    }
    for (auto& v : acc) v /= count;
    return acc;
}

// The Oja test statistic O = (N lambda (1-lambda))^-1 T' B^-1 T with
// T = sum_k a_k R_N(z_k), B = (1/(N-1)) sum_k R_N(z_k) R_N(z_k)',
// lambda = n/N and contrast weights a_k = -lambda on the first sample and
// (1-lambda) on the second, which sum to zero. Asymptotically chi-square(d)
// under F = G.
inline TestReport oja_test(const Sample& x, const Sample& y, const OjaConfig& cfg,
                           double alpha, RngStream* external_rng = nullptr) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("oja_test: alpha must lie in (0,1)");
    if (x.cols() != y.cols()) throw data_error("oja_test: sample dimensions differ");
    const std::size_t d = x.cols();
    const std::size_t m = x.rows(), n = y.rows();
    const std::size_t N = m + n;
    if (N < d + 2) throw data_error("oja_test: need m + n >= d + 2 observations");

    Sample pooled(N, d);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < d; ++j) pooled(i, j) = x(i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) pooled(m + i, j) = y(i, j);

    // One pass over subsets, accumulating every pooled point's rank vector.
    // Subsets containing the evaluated point are skipped: their determinant
    // is exactly zero, so they contribute sign(0) * np = 0.
    std::vector<Vector> ranks(N, Vector(d, 0.0));
    double count = 0.0;
    auto accumulate = [&](const std::vector<std::size_t>& p) {
        auto cof = detail::subset_cofactors(pooled, p);
        for (std::size_t k = 0; k < N; ++k) {
            bool in_subset = false;
            for (std::size_t e : p)
                if (e == k) { in_subset = true; break; }
            if (in_subset) continue;
            double t = cof.n0;
            for (std::size_t j = 0; j < d; ++j) t += pooled(k, j) * cof.np[j];
            double s = detail::sign_of(t);
            for (std::size_t j = 0; j < d; ++j) ranks[k][j] += s * cof.np[j];
        }
        count += 1.0;
    };

    std::string mode;
    if (cfg.mode == OjaConfig::Mode::exact) {
        if (detail::binomial_count(N, d) > static_cast<double>(cfg.enumeration_budget))
            throw unsupported_error(
                "oja_test: C(N,d) exceeds the exact enumeration budget; "
                "use subset-sampled mode");
        detail::for_each_subset(N, d, accumulate);
        mode = "exact";
    } else {
        if (cfg.n_subsets < 1)
            throw std::domain_error("oja_test: n_subsets must be >= 1");
        RngStream own(cfg.seed, 0);
        RngStream& rng = external_rng ? *external_rng : own;
        std::vector<std::size_t> p(d);
        for (long s = 0; s < cfg.n_subsets; ++s) {
            for (std::size_t i = 0; i < d; ++i) {
                bool fresh;
                do {
                    p[i] = rng.next_below(N);
                    fresh = true;
                    for (std::size_t j = 0; j < i; ++j)
                        if (p[j] == p[i]) { fresh = false; break; }
                } while (!fresh);
            }
            accumulate(p);
        }
        mode = "sampled(" + std::to_string(cfg.n_subsets) + ")";
    }
    for (auto& r : ranks)
        for (auto& v : r) v /= count;

    const double lambda = static_cast<double>(n) / static_cast<double>(N);
    Vector t(d, 0.0);
    Matrix b(d, d);
    for (std::size_t k = 0; k < N; ++k) {
        double a = (k < m) ? -lambda : (1.0 - lambda);
        for (std::size_t j = 0; j < d; ++j) t[j] += a * ranks[k][j];
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) b(i, j) += ranks[k][i] * ranks[k][j];
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) b(i, j) /= static_cast<double>(N - 1);

    Matrix binv;
    try {
        binv = invert(b);
    } catch (const numeric_error&) {
        throw numeric_error("oja_test: rank covariance B_N is singular");
    }

    TestReport rep;
    rep.statistic = quad_form(t, binv, t) / (static_cast<double>(N) * lambda * (1.0 - lambda));
    rep.df = static_cast<int>(d);
    rep.alpha = alpha;
    rep.p_value = chisq_sf(rep.statistic, rep.df);
    rep.reject = rep.statistic > chisq_quantile(1.0 - alpha, rep.df);
    rep.mode = std::move(mode);
    return rep;
}

} // namespace depthrank
