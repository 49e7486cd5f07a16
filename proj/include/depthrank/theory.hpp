#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "depthrank/linalg.hpp"
#include "depthrank/model.hpp"
#include "depthrank/numerics.hpp"
#include "depthrank/powergrid.hpp"

// Closed-form quality index and analytic power functions for the bivariate
// normal family, with F fixed at N2(0, I2).
//
// For any affine invariant depth the depth ordering under F coincides with
// the ordering by ||.||, so the rank transform has the closed form
// R(y; F) = P(||X|| >= ||y||) = exp(-||y||^2 / 2). That identity gives the
// quality index Q(F, G) and both asymptotic variances either in closed form
// or by one-dimensional quadrature.

namespace depthrank {

// Q(F, G) for G = N2(mu, Sigma):
//   (|S|/|Sigma|)^{1/2} exp(-mu'(Sigma^-1 - Sigma^-1 S Sigma^-1) mu / 2),
// with S = (I + Sigma^-1)^-1.
inline double closed_form_q(const Vector& mu, const Matrix& sigma) {
    if (mu.size() != 2 || sigma.rows() != 2 || sigma.cols() != 2)
        throw std::domain_error("closed_form_q: defined for d = 2 only");
    cholesky(sigma); // SPD check
    Matrix sigma_inv = invert(sigma);
    Matrix ipsi = Matrix::identity(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) ipsi(i, j) += sigma_inv(i, j);
    Matrix s = invert(ipsi);

    double det_ratio = determinant(s) / determinant(sigma);
    Matrix inner = matmul(sigma_inv, matmul(s, sigma_inv));
    Matrix quad(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) quad(i, j) = sigma_inv(i, j) - inner(i, j);
    double expo = -0.5 * quad_form(mu, quad, mu);
    return std::sqrt(det_ratio) * std::exp(expo);
}

// The location-scale special case mu = (u,u)', Sigma = s2 I:
// Q(u, s2) = exp(-u^2 / (1 + s2)) / (1 + s2).
inline double q_location_scale(double u, double s2) {
    if (!(s2 > 0.0)) throw std::domain_error("q_location_scale: sigma^2 must be > 0");
    return std::exp(-u * u / (1.0 + s2)) / (1.0 + s2);
}

// Q(F, G) for a bivariate normal mixture G; linear in the components.
inline double mixture_q(const GaussianMixture& g) {
    if (g.dim() != 2) throw std::domain_error("mixture_q: defined for d = 2 only");
    double q = 0.0;
    for (const auto& c : g.components()) q += c.weight * closed_form_q(c.mean, c.cov);
    return q;
}

namespace detail {

// E[exp(-Y'Y)] for Y ~ N(mu, Sigma): |I + 2 Sigma|^{-1/2}
// exp(-mu'(I + 2 Sigma)^{-1} mu).
inline double expected_exp_neg_sq(const Vector& mu, const Matrix& sigma) {
    const std::size_t d = mu.size();
    Matrix a = Matrix::identity(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a(i, j) += 2.0 * sigma(i, j);
    Matrix ainv = invert(a);
    return std::exp(-quad_form(mu, ainv, mu)) / std::sqrt(determinant(a));
}

// Adaptive Simpson quadrature with absolute tolerance.
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double fa, double fm, double fb, double tol,
                               int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double h = b - a;
    double whole = h / 6.0 * (fa + 4.0 * fm + fb);
    double left = h / 12.0 * (fa + 4.0 * flm + fm);
    double right = h / 12.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0)
        throw numeric_error("adaptive quadrature failed to converge");
    if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    double m = 0.5 * (a + b);
    return adaptive_simpson(f, a, b, f(a), f(m), f(b), tol, 40);
}

inline bool isotropic(const Matrix& cov, double& s2) {
    if (cov.rows() != cov.cols()) return false;
    s2 = cov(0, 0);
    for (std::size_t i = 0; i < cov.rows(); ++i)
        for (std::size_t j = 0; j < cov.cols(); ++j) {
            double want = (i == j) ? s2 : 0.0;
            if (std::fabs(cov(i, j) - want) > 1e-12 * (1.0 + std::fabs(s2))) return false;
        }
    return s2 > 0.0;
}

} // namespace detail

// Asymptotic variances of the rank sum statistic under F = N2(0, I2) and a
// bivariate normal mixture G with isotropic components:
//   sigma^2_FG = E_G[R(Y;F)^2] - Q^2          (closed form, R = exp(-||y||^2/2))
//   sigma^2_GF = E_F[P_G(||Y|| <= ||X||)^2] - Q^2
// the latter by quadrature over r = ||X|| against the chi(2) density
// r exp(-r^2/2), with P(||Y|| <= r) a noncentral chi-square cdf per component.
inline std::pair<double, double> asymptotic_sigmas(const GaussianMixture& g) {
    if (g.dim() != 2) throw std::domain_error("asymptotic_sigmas: defined for d = 2 only");
    const double q = mixture_q(g);

    double e_r2 = 0.0;
    for (const auto& c : g.components())
        e_r2 += c.weight * detail::expected_exp_neg_sq(c.mean, c.cov);
    double sigma2_fg = std::max(0.0, e_r2 - q * q);

    struct Iso {
        double w, s2, ncp;
    };
    std::vector<Iso> comps;
    for (const auto& c : g.components()) {
        double s2;
        if (!detail::isotropic(c.cov, s2))
            throw unsupported_error(
                "asymptotic_sigmas: component covariances must be isotropic (s^2 I)");
        double mu2 = c.mean[0] * c.mean[0] + c.mean[1] * c.mean[1];
        comps.push_back({c.weight, s2, mu2 / s2});
    }

    auto s_of_r = [&](double r) {
        double s = 0.0;
        for (const auto& c : comps)
            s += c.w * noncentral_chisq_cdf(r * r / c.s2, 2, c.ncp);
        return s;
    };
    auto integrand = [&](double r) {
        double s = s_of_r(r);
        return s * s * r * std::exp(-0.5 * r * r);
    };
    double e_s2 = detail::integrate(integrand, 0.0, 12.0, 1e-9);
    double sigma2_gf = std::max(0.0, e_s2 - q * q);
    return {sigma2_gf, sigma2_fg};
}

struct PowerQuery {
    AlternativeFamily family = AlternativeFamily::location_scale;
    double param = 0.0;
    std::size_t m = 100, n = 100;
    double alpha = 0.05;
};

// Asymptotic power of the two-sided rank sum test:
//   beta_Q = 1 - Phi((1/2 - Q + z s0) / s1) + Phi((1/2 - Q - z s0) / s1)
// with s0 = sqrt((1/m + 1/n)/12), s1 = sqrt(sigma^2_GF/m + sigma^2_FG/n) and
// z the 1 - alpha/2 normal quantile.
inline double beta_q(const PowerQuery& query) {
    if (!(query.alpha > 0.0 && query.alpha < 1.0))
        throw std::domain_error("beta_q: alpha must lie in (0,1)");
    GaussianMixture g = alternative_family(query.family, query.param);
    double q = mixture_q(g);
    auto [s2_gf, s2_fg] = asymptotic_sigmas(g);

    double m = static_cast<double>(query.m), n = static_cast<double>(query.n);
    double s0 = std::sqrt((1.0 / m + 1.0 / n) / 12.0);
    double s1 = std::sqrt(s2_gf / m + s2_fg / n);
    if (!(s1 > 0.0)) throw numeric_error("beta_q: degenerate asymptotic variance");
    double zc = std_normal_quantile(1.0 - query.alpha / 2.0);
    return 1.0 - std_normal_cdf((0.5 - q + zc * s0) / s1) +
           std_normal_cdf((0.5 - q - zc * s0) / s1);
}

// Asymptotic power of the T^2 test: a noncentral chi-square(2) tail with the
// family's noncentrality parameter (epsilon = 0.1, sigma = 4 in the
// contaminated location family; sigma = u + 1 elsewhere). Pure scale changes
// leave the T^2 test at its trivial power alpha.
inline double beta_t2(const PowerQuery& query) {
    if (!(query.alpha > 0.0 && query.alpha < 1.0))
        throw std::domain_error("beta_t2: alpha must lie in (0,1)");
    const double eps = 0.1;
    // The printed formulas assume m = n; for unequal sizes use the harmonic
    // equivalent 2mn/(m+n), which reduces to n when m = n.
    double m = static_cast<double>(query.m), n_q = static_cast<double>(query.n);
    double n = 2.0 * m * n_q / (m + n_q);

    double ncp;
    switch (query.family) {
        case AlternativeFamily::contaminated_location: {
            double u = query.param, s2 = 16.0;
            ncp = n * (1.0 - eps) * (1.0 - eps) * u * u /
                  (1.0 + 5.0 * eps * u * s2 + eps * (1.0 - eps) * u * u);
            break;
        }
        case AlternativeFamily::contaminated_scale: {
            double s2 = query.param;
            if (s2 < 1.0)
                throw std::domain_error("beta_t2: contaminated-scale needs sigma^2 >= 1");
            double u = std::sqrt(s2) - 1.0;
            ncp = 2.0 * n * eps * eps * u * u /
                  (1.0 + eps + (1.0 - eps) * s2 + 2.0 * eps * (1.0 - eps) * u * u);
            break;
        }
        case AlternativeFamily::location_scale: {
            double u = query.param, s = 1.0 + u;
            ncp = 2.0 * n * u * u / (1.0 + s * s);
            break;
        }
        case AlternativeFamily::pure_location: {
            double u = query.param;
            ncp = n * u * u;
            break;
        }
        case AlternativeFamily::pure_scale:
            return query.alpha;
        default:
            throw std::domain_error("beta_t2: unknown family");
    }
    double crit = chisq_quantile(1.0 - query.alpha, 2);
    return noncentral_chisq_sf(crit, 2, ncp);
}

enum class Figure { fig1, fig2 };

// fig1: the quality index surface Q(u, sigma^2) sampled on a grid, one curve
// per sigma^2 value. fig2: analytic power against pure scale alternatives at
// m = n = 100 (the Monte Carlo Oja curve is added by the simulation driver).
inline PowerGrid figure_grid(Figure which, double alpha = 0.05) {
    PowerGrid grid;
    char label[64];
    if (which == Figure::fig1) {
        grid.target = "fig1";
        for (int si = 1; si <= 16; ++si) {
            double s2 = 0.25 * si;
            std::snprintf(label, sizeof(label), "q[s2=%.2f]", s2);
            for (int ui = 0; ui <= 20; ++ui) {
                double u = 0.1 * ui;
                grid.cells.push_back({u, label, q_location_scale(u, s2), 0.0, false});
            }
        }
        return grid;
    }
    grid.target = "fig2";
    for (int si = 0; si <= 20; ++si) {
        double s2 = 1.0 + 0.1 * si;
        PowerQuery query{AlternativeFamily::pure_scale, s2, 100, 100, alpha};
        grid.cells.push_back({s2, "t2", beta_t2(query), 0.0, false});
        grid.cells.push_back({s2, "q", beta_q(query), 0.0, false});
    }
    return grid;
}

} // namespace depthrank
