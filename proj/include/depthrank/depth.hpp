#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "depthrank/errors.hpp"
#include "depthrank/linalg.hpp"
#include "depthrank/rng.hpp"

// Data depth functions: Mahalanobis, halfspace (Tukey), projection
// (Stahel-Donoho outlyingness based) and the one-dimensional cdf ordering,
// plus the depth-induced rank transform.
//
// Exact halfspace depth in the plane runs an angular sweep over the critical
// directions determined by the data, O(m log m) per query. Exact projection
// depth in the plane enumerates a finite set of critical directions at which
// the supremum of the projected outlyingness must be attained (see
// Pd2ExactTable below). In higher dimensions both fall back to an
// approximate mode that optimizes over randomly sampled directions, giving
// an upper bound on the exact depth.

namespace depthrank {

enum class DepthMethod { mahalanobis, halfspace, projection, cdf1d };
enum class DepthMode { exact, approximate };
enum class ProjectionScale { med_mad, mean_sd };

struct DepthSpec {
    DepthMethod method = DepthMethod::mahalanobis;
    DepthMode mode = DepthMode::exact;
    int n_directions = 1000;                    // approximate mode
    ProjectionScale scale = ProjectionScale::med_mad;
    std::uint64_t direction_seed = 0xD1CE5EEDu; // approximate mode, if no stream given
};

inline const char* method_name(DepthMethod m) {
    switch (m) {
        case DepthMethod::mahalanobis: return "mahalanobis";
        case DepthMethod::halfspace: return "halfspace";
        case DepthMethod::projection: return "projection";
        case DepthMethod::cdf1d: return "cdf1d";
    }
    return "?";
}

inline DepthMethod method_from_name(const std::string& s) {
    if (s == "mahalanobis") return DepthMethod::mahalanobis;
    if (s == "halfspace") return DepthMethod::halfspace;
    if (s == "projection") return DepthMethod::projection;
    if (s == "cdf1d") return DepthMethod::cdf1d;
    throw std::domain_error("unknown depth method: " + s);
}

namespace detail {

// Median of v (v is permuted). Even length averages the two middle values.
inline double median_of(std::vector<double>& v) {
    const std::size_t n = v.size();
    auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
    std::nth_element(v.begin(), mid, v.end());
    double hi = *mid;
    if (n % 2 == 1) return hi;
    double lo = *std::max_element(v.begin(), mid);
    return 0.5 * (lo + hi);
}

inline double mad_about(std::vector<double>& v, double med) {
    for (auto& t : v) t = std::fabs(t - med);
    return median_of(v);
}

// Direction angle folded into [0, pi): u and -u describe the same projection
// axis.
inline double angle_mod_pi(double ux, double uy) {
    double a = std::atan2(uy, ux);
    if (a < 0.0) a += kPi;
    if (a >= kPi) a -= kPi;
    return a;
}

// Exact projection-depth machinery for d = 2 with (Med, MAD).
//
// As a unit direction u(theta) rotates through [0, pi), the projected median
// and MAD are piecewise-smooth in theta, and on every smoothness piece the
// outlyingness ratio |u'x - Med| / MAD is monotone (the derivative of a
// ratio of linear forms in u has constant sign). The supremum over theta is
// therefore attained at the piece boundaries:
//   * angles perpendicular to a point difference X_i - X_j, where the
//     projected order (hence the median identity) changes, and
//   * angles perpendicular to X_i + X_j - 2M, where two absolute deviations
//     about the current median point M tie with opposite signs and the
//     MAD-defining index can change.
// The table below enumerates the first set, determines the median identity
// per angular interval, collects the second set restricted to intervals
// where its M is active, and keeps only ties near the MAD order-statistic
// level. (Med, MAD) is cached per retained angle so queries are a single
// pass over the table.
struct Pd2ExactTable {
    struct Entry {
        double ux, uy;
        double med;
        double inv_mad;
    };
    std::vector<Entry> entries;

    static Pd2ExactTable build(const Sample& ref) {
        const std::size_t m = ref.rows();
        Pd2ExactTable table;

        std::vector<double> normals; // angles perpendicular to point pairs
        normals.reserve(m * (m - 1) / 2);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                double vx = ref(i, 0) - ref(j, 0);
                double vy = ref(i, 1) - ref(j, 1);
                if (vx == 0.0 && vy == 0.0) continue;
                normals.push_back(angle_mod_pi(-vy, vx));
            }
        std::sort(normals.begin(), normals.end());
        normals.erase(std::unique(normals.begin(), normals.end(),
                                  [](double a, double b) { return std::fabs(a - b) < 1e-13; }),
                      normals.end());
        if (normals.empty()) normals.push_back(0.0);
        const std::size_t nang = normals.size();

        // Median identity per interval between consecutive critical angles.
        struct MedianId {
            int a = -1, b = -1; // b = -1 for odd m
            Vector point{0.0, 0.0};
            bool operator<(const MedianId& o) const {
                return std::tie(a, b) < std::tie(o.a, o.b);
            }
        };
        std::vector<MedianId> interval_median(nang);
        std::vector<double> proj(m);
        std::vector<int> idx(m);
        for (std::size_t j = 0; j < nang; ++j) {
            double next = (j + 1 < nang) ? normals[j + 1] : normals[0] + kPi;
            double mid = 0.5 * (normals[j] + next);
            if (mid >= kPi) mid -= kPi;
            double ux = std::cos(mid), uy = std::sin(mid);
            for (std::size_t i = 0; i < m; ++i) proj[i] = ux * ref(i, 0) + uy * ref(i, 1);
            std::iota(idx.begin(), idx.end(), 0);
            auto cmp = [&](int a, int b) { return proj[a] < proj[b]; };
            auto half = idx.begin() + static_cast<std::ptrdiff_t>(m / 2);
            std::nth_element(idx.begin(), half, idx.end(), cmp);
            MedianId id;
            if (m % 2 == 1) {
                id.a = *half;
                id.point = {ref(id.a, 0), ref(id.a, 1)};
            } else {
                int hi = *half;
                int lo = *std::max_element(idx.begin(), half, cmp);
                id.a = std::min(lo, hi);
                id.b = std::max(lo, hi);
                id.point = {0.5 * (ref(id.a, 0) + ref(id.b, 0)),
                            0.5 * (ref(id.a, 1) + ref(id.b, 1))};
            }
            interval_median[j] = std::move(id);
        }

        // Opposite-sign deviation ties, grouped by distinct median identity
        // and restricted to the intervals where that identity is active.
        std::map<std::pair<int, int>, Vector> distinct;
        for (const auto& id : interval_median)
            distinct.emplace(std::make_pair(id.a, id.b), id.point);

        auto interval_of = [&](double theta) -> std::size_t {
            auto it = std::upper_bound(normals.begin(), normals.end(), theta);
            if (it == normals.begin()) return nang - 1; // wrap interval
            return static_cast<std::size_t>(it - normals.begin()) - 1;
        };

        std::vector<double> angles = normals;
        std::vector<double> devs(m);
        for (const auto& [key, mpt] : distinct) {
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j) {
                    double wx = ref(i, 0) + ref(j, 0) - 2.0 * mpt[0];
                    double wy = ref(i, 1) + ref(j, 1) - 2.0 * mpt[1];
                    if (wx == 0.0 && wy == 0.0) continue;
                    double theta = angle_mod_pi(-wy, wx);
                    std::size_t iv = interval_of(theta);
                    const auto& id = interval_median[iv];
                    if (std::make_pair(id.a, id.b) != key) continue;

                    // Keep only ties near the MAD level of this direction.
                    double ux = std::cos(theta), uy = std::sin(theta);
                    for (std::size_t t = 0; t < m; ++t)
                        proj[t] = ux * ref(t, 0) + uy * ref(t, 1);
                    std::vector<double> tmp = proj;
                    double med = median_of(tmp);
                    for (std::size_t t = 0; t < m; ++t) devs[t] = std::fabs(proj[t] - med);
                    double di = devs[i];
                    std::vector<double> sorted = devs;
                    std::sort(sorted.begin(), sorted.end());
                    std::size_t k = (m % 2 == 1) ? (m - 1) / 2 : m / 2 - 1;
                    std::size_t lo = (k >= 1) ? k - 1 : 0;
                    std::size_t hi = std::min(m - 1, (m % 2 == 1) ? k + 1 : k + 2);
                    double tol = 1e-9 * (1.0 + sorted[k]);
                    if (di >= sorted[lo] - tol && di <= sorted[hi] + tol)
                        angles.push_back(theta);
                }
        }

        std::sort(angles.begin(), angles.end());
        angles.erase(std::unique(angles.begin(), angles.end(),
                                 [](double a, double b) { return std::fabs(a - b) < 1e-13; }),
                     angles.end());

        table.entries.reserve(angles.size());
        for (double theta : angles) {
            double ux = std::cos(theta), uy = std::sin(theta);
            for (std::size_t t = 0; t < m; ++t) proj[t] = ux * ref(t, 0) + uy * ref(t, 1);
            std::vector<double> tmp = proj;
            double med = median_of(tmp);
            double mad = mad_about(proj, med);
            if (!(mad > 0.0))
                throw numeric_error(
                    "projection_depth: zero projected scale in direction (" +
                    std::to_string(ux) + ", " + std::to_string(uy) + ")");
            table.entries.push_back({ux, uy, med, 1.0 / mad});
        }
        return table;
    }
};

} // namespace detail

struct OneDimLocScale {
    double loc = 0.0;
    double scale = 0.0;
};

// Evaluates a fixed depth function against a fixed reference sample. The
// constructor does all per-reference precomputation; depth() is const and
// safe to call from many threads.
class DepthEvaluator {
public:
    DepthEvaluator(const Sample& ref, const DepthSpec& spec)
        : DepthEvaluator(ref, spec, nullptr) {}

    // Approximate-mode directions are drawn once from `rng` at construction.
    DepthEvaluator(const Sample& ref, const DepthSpec& spec, RngStream& rng)
        : DepthEvaluator(ref, spec, &rng) {}

    std::size_t dim() const { return d_; }

    double depth(std::span<const double> x) const {
        if (x.size() != d_)
            throw data_error("depth: query dimension " + std::to_string(x.size()) +
                             " does not match reference dimension " + std::to_string(d_));
        switch (spec_.method) {
            case DepthMethod::mahalanobis: return mahalanobis(x);
            case DepthMethod::cdf1d: return ecdf(x[0]);
            case DepthMethod::halfspace:
                if (spec_.mode == DepthMode::approximate) return halfspace_approx(x);
                return (d_ == 1) ? halfspace_1d(x[0]) : halfspace_sweep_2d(x);
            case DepthMethod::projection:
                if (spec_.mode == DepthMode::approximate) return projection_approx(x);
                if (d_ == 1) return projection_1d(x[0]);
                return (spec_.scale == ProjectionScale::mean_sd) ? projection_mean_sd(x)
                                                                 : projection_med_mad_2d(x);
        }
        throw std::domain_error("unknown depth method");
    }

    std::vector<double> depths(const Sample& pts) const {
        std::vector<double> out(pts.rows());
        for (std::size_t i = 0; i < pts.rows(); ++i) out[i] = depth(pts.row(i));
        return out;
    }

private:
    DepthEvaluator(const Sample& ref, const DepthSpec& spec, RngStream* rng)
        : spec_(spec), ref_(ref), d_(ref.cols()), m_(ref.rows()) {
        if (m_ == 0) throw data_error("depth: reference sample is empty");
        if (spec_.method == DepthMethod::cdf1d && d_ != 1)
            throw unsupported_error("cdf1d depth is defined for d = 1 only");
        if (spec_.mode == DepthMode::exact && d_ > 2 &&
            (spec_.method == DepthMethod::halfspace ||
             spec_.method == DepthMethod::projection))
            throw unsupported_error(std::string(method_name(spec_.method)) +
                                    " depth has no exact algorithm for d > 2; "
                                    "use approximate mode");

        switch (spec_.method) {
            case DepthMethod::mahalanobis: init_mahalanobis(); break;
            case DepthMethod::cdf1d: init_sorted_1d(); break;
            case DepthMethod::halfspace:
                if (spec_.mode == DepthMode::approximate) init_directions(rng, false);
                else if (d_ == 1) init_sorted_1d();
                break;
            case DepthMethod::projection:
                if (spec_.mode == DepthMode::approximate) init_directions(rng, true);
                else if (d_ == 1) init_projection_1d();
                else if (spec_.scale == ProjectionScale::mean_sd) init_mean_sd();
                else pd2_ = detail::Pd2ExactTable::build(ref_);
                break;
        }
    }

    void init_mahalanobis() {
        if (m_ < d_ + 1)
            throw data_error("mahalanobis_depth: need at least d+1 observations");
        auto [mean, cov] = sample_mean_cov(ref_);
        mean_ = std::move(mean);
        try {
            inv_cov_ = invert(cov);
        } catch (const numeric_error&) {
            throw numeric_error("mahalanobis_depth: sample covariance is singular");
        }
    }

    void init_mean_sd() {
        auto [mean, cov] = sample_mean_cov(ref_);
        mean_ = std::move(mean);
        try {
            inv_cov_ = invert(cov);
        } catch (const numeric_error&) {
            throw numeric_error("projection_depth: sample covariance is singular");
        }
    }

    void init_sorted_1d() {
        sorted_.assign(ref_.data().begin(), ref_.data().end());
        std::sort(sorted_.begin(), sorted_.end());
    }

    void init_projection_1d() {
        std::vector<double> v(ref_.data().begin(), ref_.data().end());
        if (spec_.scale == ProjectionScale::mean_sd) {
            if (m_ < 2) throw data_error("projection_depth: need >= 2 observations");
            auto [mean, cov] = sample_mean_cov(ref_);
            loc1d_ = {mean[0], std::sqrt(cov(0, 0))};
        } else {
            std::vector<double> tmp = v;
            double med = detail::median_of(tmp);
            loc1d_ = {med, detail::mad_about(v, med)};
        }
        if (!(loc1d_.scale > 0.0))
            throw numeric_error("projection_depth: zero scale in the reference sample");
    }

    void init_directions(RngStream* external, bool with_loc_scale) {
        if (spec_.n_directions < 1)
            throw std::domain_error("depth: n_directions must be >= 1");
        RngStream own(spec_.direction_seed, 0);
        RngStream& rng = external ? *external : own;
        const std::size_t nd = static_cast<std::size_t>(spec_.n_directions);
        dirs_ = Matrix(nd, d_);
        if (with_loc_scale) dir_stats_.resize(nd);
        else dir_proj_.assign(nd * m_, 0.0);
        std::vector<double> proj(m_);
        for (std::size_t k = 0; k < nd; ++k) {
            auto u = rng.next_unit_vector(d_);
            for (std::size_t j = 0; j < d_; ++j) dirs_(k, j) = u[j];
            for (std::size_t i = 0; i < m_; ++i) proj[i] = dot(ref_.row(i), u);
            if (with_loc_scale) {
                OneDimLocScale ls;
                if (spec_.scale == ProjectionScale::mean_sd) {
                    double mean = std::accumulate(proj.begin(), proj.end(), 0.0) /
                                  static_cast<double>(m_);
                    double ss = 0.0;
                    for (double p : proj) ss += (p - mean) * (p - mean);
                    ls = {mean, (m_ > 1) ? std::sqrt(ss / static_cast<double>(m_ - 1)) : 0.0};
                } else {
                    std::vector<double> tmp = proj;
                    double med = detail::median_of(tmp);
                    tmp = proj;
                    ls = {med, detail::mad_about(tmp, med)};
                }
                if (!(ls.scale > 0.0))
                    throw numeric_error(
                        "projection_depth: zero projected scale in sampled direction " +
                        std::to_string(k));
                dir_stats_[k] = ls;
            } else {
                std::sort(proj.begin(), proj.end());
                std::copy(proj.begin(), proj.end(), dir_proj_.begin() + k * m_);
            }
        }
    }

    double mahalanobis(std::span<const double> x) const {
        Vector diff(d_);
        for (std::size_t j = 0; j < d_; ++j) diff[j] = x[j] - mean_[j];
        double q = quad_form(diff, inv_cov_, diff);
        return 1.0 / (1.0 + q);
    }

    double ecdf(double x) const {
        auto le = std::upper_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin();
        return static_cast<double>(le) / static_cast<double>(m_);
    }

    double halfspace_1d(double x) const {
        auto le = std::upper_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin();
        auto ge = sorted_.end() - std::lower_bound(sorted_.begin(), sorted_.end(), x);
        return static_cast<double>(std::min<std::ptrdiff_t>(le, ge)) /
               static_cast<double>(m_);
    }

    // Angular sweep: each data point occupies the closed half-circle of
    // directions within pi/2 of its own angle about x. The count of points in
    // the closed halfplane with normal direction phi is piecewise constant in
    // phi; its minimum over the open intervals between consecutive critical
    // angles is the exact depth (counts at the critical angles themselves are
    // never smaller than both neighbouring plateaus, since boundary points
    // belong to both closed halfplanes).
    double halfspace_sweep_2d(std::span<const double> x) const {
        std::size_t coincident = 0;
        std::vector<std::pair<double, int>> ev; // (angle, +1 entry / -1 exit)
        ev.reserve(2 * m_);
        for (std::size_t i = 0; i < m_; ++i) {
            double vx = ref_(i, 0) - x[0];
            double vy = ref_(i, 1) - x[1];
            if (vx == 0.0 && vy == 0.0) {
                ++coincident;
                continue;
            }
            double a = std::atan2(vy, vx);
            double entry = a - 0.5 * kPi;
            double exit = a + 0.5 * kPi;
            auto wrap = [](double t) {
                while (t < 0.0) t += 2.0 * kPi;
                while (t >= 2.0 * kPi) t -= 2.0 * kPi;
                return t;
            };
            ev.emplace_back(wrap(entry), +1);
            ev.emplace_back(wrap(exit), -1);
        }
        if (ev.empty())
            return static_cast<double>(coincident) / static_cast<double>(m_);

        std::sort(ev.begin(), ev.end());

        // Count on the wrap interval (after the last event), by direct test.
        double phi0 = 0.5 * (ev.back().first + ev.front().first + 2.0 * kPi);
        if (phi0 >= 2.0 * kPi) phi0 -= 2.0 * kPi;
        double ux = std::cos(phi0), uy = std::sin(phi0);
        long cur = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            double vx = ref_(i, 0) - x[0];
            double vy = ref_(i, 1) - x[1];
            if (vx == 0.0 && vy == 0.0) continue;
            if (ux * vx + uy * vy >= 0.0) ++cur;
        }
        long best = cur;
        std::size_t k = 0;
        while (k < ev.size()) {
            std::size_t k2 = k;
            long delta = 0;
            while (k2 < ev.size() && ev[k2].first == ev[k].first) delta += ev[k2++].second;
            cur += delta;
            best = std::min(best, cur);
            k = k2;
        }
        return static_cast<double>(best + static_cast<long>(coincident)) /
               static_cast<double>(m_);
    }

    double halfspace_approx(std::span<const double> x) const {
        const std::size_t nd = dirs_.rows();
        long best = static_cast<long>(m_);
        for (std::size_t k = 0; k < nd; ++k) {
            double t = dot(dirs_.row(k), x);
            const double* beg = dir_proj_.data() + k * m_;
            // #{u'X_i >= u'x} over the sorted projections of this direction
            long ge = static_cast<long>(m_) -
                      static_cast<long>(std::lower_bound(beg, beg + m_, t) - beg);
            best = std::min(best, ge);
        }
        return static_cast<double>(best) / static_cast<double>(m_);
    }

    double projection_1d(double x) const {
        double o = std::fabs(x - loc1d_.loc) / loc1d_.scale;
        return 1.0 / (1.0 + o);
    }

    // With (mean, sd) the supremum over directions has the closed form
    // sqrt((x-mean)' S^{-1} (x-mean)) by Cauchy-Schwarz in the S inner
    // product, so "exact" needs no direction enumeration.
    double projection_mean_sd(std::span<const double> x) const {
        Vector diff(d_);
        for (std::size_t j = 0; j < d_; ++j) diff[j] = x[j] - mean_[j];
        double q = quad_form(diff, inv_cov_, diff);
        double o = std::sqrt(std::max(0.0, q));
        return 1.0 / (1.0 + o);
    }

    double projection_med_mad_2d(std::span<const double> x) const {
        double o = 0.0;
        for (const auto& e : pd2_.entries) {
            double v = std::fabs(e.ux * x[0] + e.uy * x[1] - e.med) * e.inv_mad;
            if (v > o) o = v;
        }
        // Directions aligned with x - X_i, evaluated directly.
        std::vector<double> proj(m_), tmp(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            double vx = x[0] - ref_(i, 0);
            double vy = x[1] - ref_(i, 1);
            double n = std::hypot(vx, vy);
            if (n < 1e-300) continue;
            double ux = vx / n, uy = vy / n;
            for (std::size_t t = 0; t < m_; ++t)
                proj[t] = ux * ref_(t, 0) + uy * ref_(t, 1);
            tmp = proj;
            double med = detail::median_of(tmp);
            double mad = detail::mad_about(proj, med);
            if (!(mad > 0.0))
                throw numeric_error(
                    "projection_depth: zero projected scale in direction (" +
                    std::to_string(ux) + ", " + std::to_string(uy) + ")");
            double v = std::fabs(ux * x[0] + uy * x[1] - med) / mad;
            if (v > o) o = v;
        }
        return 1.0 / (1.0 + o);
    }

    double projection_approx(std::span<const double> x) const {
        double o = 0.0;
        const std::size_t nd = dirs_.rows();
        for (std::size_t k = 0; k < nd; ++k) {
            double t = dot(dirs_.row(k), x);
            double v = std::fabs(t - dir_stats_[k].loc) / dir_stats_[k].scale;
            if (v > o) o = v;
        }
        return 1.0 / (1.0 + o);
    }

    DepthSpec spec_;
    Sample ref_;
    std::size_t d_, m_;

    Vector mean_;
    Matrix inv_cov_;
    std::vector<double> sorted_;
    OneDimLocScale loc1d_;
    detail::Pd2ExactTable pd2_;
    Matrix dirs_;
    std::vector<double> dir_proj_; // row k: sorted (halfspace) or raw projections
    std::vector<OneDimLocScale> dir_stats_;
};

// Depth rank transform R(y; F_m): the fraction of the reference sample no
// deeper than y, ties resolved by <= exactly.
class RankTransformer {
public:
    RankTransformer(const Sample& ref, const DepthSpec& spec)
        : eval_(ref, spec), m_(ref.rows()) {
        init(ref);
    }
    RankTransformer(const Sample& ref, const DepthSpec& spec, RngStream& rng)
        : eval_(ref, spec, rng), m_(ref.rows()) {
        init(ref);
    }

    const DepthEvaluator& evaluator() const { return eval_; }
    const std::vector<double>& ref_depths() const { return ref_depths_; }

    double depth(std::span<const double> y) const { return eval_.depth(y); }

    double rank(std::span<const double> y) const { return rank_of_depth(eval_.depth(y)); }

    double rank_of_depth(double dy) const {
        auto le = std::upper_bound(sorted_depths_.begin(), sorted_depths_.end(), dy) -
                  sorted_depths_.begin();
        return static_cast<double>(le) / static_cast<double>(m_);
    }

private:
    void init(const Sample& ref) {
        ref_depths_ = eval_.depths(ref);
        sorted_depths_ = ref_depths_;
        std::sort(sorted_depths_.begin(), sorted_depths_.end());
    }

    DepthEvaluator eval_;
    std::size_t m_;
    std::vector<double> ref_depths_;
    std::vector<double> sorted_depths_;
};

// -- one-shot conveniences ---------------------------------------------------

inline double depth(std::span<const double> x, const Sample& ref, const DepthSpec& spec) {
    return DepthEvaluator(ref, spec).depth(x);
}

inline double mahalanobis_depth(std::span<const double> x, const Sample& ref) {
    DepthSpec spec;
    spec.method = DepthMethod::mahalanobis;
    return depth(x, ref, spec);
}

inline double halfspace_depth(std::span<const double> x, const Sample& ref,
                              const DepthSpec& spec) {
    DepthSpec s = spec;
    s.method = DepthMethod::halfspace;
    return depth(x, ref, s);
}

inline double projection_depth(std::span<const double> x, const Sample& ref,
                               const DepthSpec& spec) {
    DepthSpec s = spec;
    s.method = DepthMethod::projection;
    return depth(x, ref, s);
}

inline double cdf_depth_1d(double x, const Sample& ref) {
    DepthSpec spec;
    spec.method = DepthMethod::cdf1d;
    return depth(std::span<const double>(&x, 1), ref, spec);
}

inline double rank_transform(std::span<const double> y, const Sample& ref,
                             const DepthSpec& spec) {
    return RankTransformer(ref, spec).rank(y);
}

} // namespace depthrank
