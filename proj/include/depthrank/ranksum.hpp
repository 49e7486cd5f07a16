#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "depthrank/depth.hpp"
#include "depthrank/numerics.hpp"

// The depth-based two-sample rank sum statistic
//   Q(F_m, G_n) = (1/n) sum_j R(Y_j; F_m)
// with all depths taken relative to the first sample, its plug-in variance
// estimates, and the asymptotic normal tests built on them. Under F = G the
// standardized statistic (Q - 1/2) / sqrt((1/m + 1/n)/12) is asymptotically
// standard normal; under F != G the general test studentizes with the
// plug-in variances instead.

namespace depthrank {

struct QResult {
    double q = 0.0;
    std::size_t m = 0, n = 0;
    double sigma2_gf_hat = 0.0;
    double sigma2_fg_hat = 0.0;
    double z_null = 0.0;          // (q - 1/2) / sqrt((1/m + 1/n)/12)
    double p_null = 1.0;
};

struct QTestReport {
    QResult result;
    double alpha = 0.05;
    bool reject = false;
};

struct GeneralQTestReport {
    QResult result;
    double q0 = 0.5;
    double z = 0.0;
    double p_value = 1.0;
    double ci_low = 0.0, ci_high = 1.0; // (1-alpha) confidence interval for Q(F,G)
    double alpha = 0.05;
    bool reject = false;
};

namespace detail {

struct QComputation {
    QResult res;
    std::vector<double> ranks_y;
};

inline QComputation q_compute(const Sample& x, const Sample& y, const DepthSpec& spec,
                              RngStream* rng) {
    if (x.cols() != y.cols())
        throw data_error("q_statistic: sample dimensions differ (" +
                         std::to_string(x.cols()) + " vs " + std::to_string(y.cols()) + ")");
    if (x.rows() == 0 || y.rows() == 0)
        throw data_error("q_statistic: samples must be nonempty");

    RankTransformer rt = rng ? RankTransformer(x, spec, *rng) : RankTransformer(x, spec);

    QComputation out;
    out.res.m = x.rows();
    out.res.n = y.rows();
    out.ranks_y.resize(y.rows());

    std::vector<double> depths_y(y.rows());
    double q = 0.0, comp = 0.0; // Kahan accumulation
    for (std::size_t j = 0; j < y.rows(); ++j) {
        depths_y[j] = rt.depth(y.row(j));
        double r = rt.rank_of_depth(depths_y[j]);
        out.ranks_y[j] = r;
        double t = r - comp;
        double s = q + t;
        comp = (s - q) - t;
        q = s;
    }
    q /= static_cast<double>(y.rows());
    out.res.q = q;

    // sigma^2_FG: dispersion of R(Y_j; F_m).
    double s2 = 0.0;
    for (double r : out.ranks_y) s2 += r * r;
    s2 = s2 / static_cast<double>(y.rows()) - q * q;
    out.res.sigma2_fg_hat = std::max(0.0, s2);

    // sigma^2_GF: dispersion of S(X_i) = (1/n) #{j : D(X_i) <= D(Y_j)}.
    std::vector<double> sorted_dy = depths_y;
    std::sort(sorted_dy.begin(), sorted_dy.end());
    double s2g = 0.0;
    for (double dx : rt.ref_depths()) {
        auto lt = std::lower_bound(sorted_dy.begin(), sorted_dy.end(), dx) -
                  sorted_dy.begin();
        double s = static_cast<double>(y.rows() - static_cast<std::size_t>(lt)) /
                   static_cast<double>(y.rows());
        s2g += s * s;
    }
    s2g = s2g / static_cast<double>(x.rows()) - q * q;
    out.res.sigma2_gf_hat = std::max(0.0, s2g);

    double null_sd = std::sqrt((1.0 / static_cast<double>(out.res.m) +
                                1.0 / static_cast<double>(out.res.n)) /
                               12.0);
    out.res.z_null = (q - 0.5) / null_sd;
    out.res.p_null = 2.0 * (1.0 - std_normal_cdf(std::fabs(out.res.z_null)));
    return out;
}

} // namespace detail

inline double q_statistic(const Sample& x, const Sample& y, const DepthSpec& spec) {
    return detail::q_compute(x, y, spec, nullptr).res.q;
}

inline double q_statistic(const Sample& x, const Sample& y, const DepthSpec& spec,
                          RngStream& rng) {
    return detail::q_compute(x, y, spec, &rng).res.q;
}

inline std::pair<double, double> variance_estimates(const Sample& x, const Sample& y,
                                                    const DepthSpec& spec) {
    auto c = detail::q_compute(x, y, spec, nullptr);
    return {c.res.sigma2_gf_hat, c.res.sigma2_fg_hat};
}

// Two-sided test of F = G via the null standardization (Q - 1/2) over
// sqrt((1/m + 1/n)/12); rejects when p < alpha.
inline QTestReport null_test(const Sample& x, const Sample& y, const DepthSpec& spec,
                             double alpha, RngStream* rng = nullptr) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("null_test: alpha must lie in (0,1)");
    QTestReport rep;
    rep.result = detail::q_compute(x, y, spec, rng).res;
    rep.alpha = alpha;
    rep.reject = rep.result.p_null < alpha;
    return rep;
}

// Two-sided test of Q(F,G) = q0 with plug-in studentization, plus a (1-alpha)
// confidence interval for Q(F,G).
inline GeneralQTestReport general_test(const Sample& x, const Sample& y,
                                       const DepthSpec& spec, double q0, double alpha,
                                       RngStream* rng = nullptr) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("general_test: alpha must lie in (0,1)");
    if (!(q0 >= 0.0 && q0 <= 1.0))
        throw std::domain_error("general_test: q0 must lie in [0,1]");

    GeneralQTestReport rep;
    rep.result = detail::q_compute(x, y, spec, rng).res;
    rep.q0 = q0;
    rep.alpha = alpha;

    double var = rep.result.sigma2_gf_hat / static_cast<double>(rep.result.m) +
                 rep.result.sigma2_fg_hat / static_cast<double>(rep.result.n);
    if (!(var > 0.0))
        throw numeric_error("general_test: plug-in variance estimate is zero");
    double sd = std::sqrt(var);
    rep.z = (rep.result.q - q0) / sd;
    rep.p_value = 2.0 * (1.0 - std_normal_cdf(std::fabs(rep.z)));
    double zc = std_normal_quantile(1.0 - alpha / 2.0);
    rep.ci_low = rep.result.q - zc * sd;
    rep.ci_high = rep.result.q + zc * sd;
    rep.reject = rep.p_value < alpha;
    return rep;
}

} // namespace depthrank
