#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "depthrank/competitors.hpp"
#include "depthrank/model.hpp"
#include "depthrank/powerlab.hpp"
#include "oracles.hpp"

using namespace depthrank;
using Catch::Approx;

namespace {

Sample gaussian_sample(std::size_t n, std::size_t d, std::uint64_t seed, double shift = 0.0) {
    RngStream rng(seed, 0);
    Sample s(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) s(i, j) = rng.next_normal() + shift;
    return s;
}

} // namespace

TEST_CASE("hotelling t2", "[competitors]") {
    SECTION("mirrored means give statistic zero") {
        Sample x = gaussian_sample(12, 2, 700);
        auto [mean, cov] = sample_mean_cov(x);
        Sample y(12, 2);
        for (std::size_t i = 0; i < 12; ++i)
            for (std::size_t j = 0; j < 2; ++j) y(i, j) = 2.0 * mean[j] - x(i, j);
        auto rep = hotelling_t2_test(x, y, 0.05);
        REQUIRE(rep.statistic == Approx(0.0).margin(1e-18));
        REQUIRE(rep.p_value == Approx(1.0));
        REQUIRE_FALSE(rep.reject);
        REQUIRE(rep.df == 2);
    }

    SECTION("d = 1 matches the scalar pooled-variance formula") {
        RngStream rng(701, 0);
        for (int trial = 0; trial < 10; ++trial) {
            std::size_t m = 10 + rng.next_below(20), n = 10 + rng.next_below(20);
            Sample x(m, 1), y(n, 1);
            for (std::size_t i = 0; i < m; ++i) x(i, 0) = rng.next_normal();
            for (std::size_t j = 0; j < n; ++j) y(j, 0) = rng.next_normal() + 0.4;

            double mx = 0, my = 0;
            for (std::size_t i = 0; i < m; ++i) mx += x(i, 0);
            for (std::size_t j = 0; j < n; ++j) my += y(j, 0);
            mx /= m; my /= n;
            double sx = 0, sy = 0;
            for (std::size_t i = 0; i < m; ++i) sx += (x(i, 0) - mx) * (x(i, 0) - mx);
            for (std::size_t j = 0; j < n; ++j) sy += (y(j, 0) - my) * (y(j, 0) - my);
            double pooled = (sx + sy) / static_cast<double>(m + n - 2);
            double z2 = (mx - my) * (mx - my) /
                        ((1.0 / static_cast<double>(m) + 1.0 / static_cast<double>(n)) * pooled);
            auto rep = hotelling_t2_test(x, y, 0.05);
            REQUIRE(rep.statistic == Approx(z2).margin(1e-10));
        }
    }

    SECTION("affine invariance") {
        Sample x = gaussian_sample(25, 2, 702);
        Sample y = gaussian_sample(20, 2, 703, 0.5);
        Matrix a(2, 2, {2.0, 0.7, -0.4, 1.1});
        Vector b{3.0, -1.0};
        auto apply = [&](const Sample& s) {
            Sample out(s.rows(), 2);
            for (std::size_t i = 0; i < s.rows(); ++i) {
                auto v = matvec(a, s.row(i));
                out(i, 0) = v[0] + b[0];
                out(i, 1) = v[1] + b[1];
            }
            return out;
        };
        double t0 = hotelling_t2_test(x, y, 0.05).statistic;
        double t1 = hotelling_t2_test(apply(x), apply(y), 0.05).statistic;
        REQUIRE(t1 == Approx(t0).margin(1e-9 * (1.0 + t0)));
    }

    SECTION("null size near alpha") {
        auto f = GaussianMixture::standard(2);
        SimPlan plan;
        plan.test = TestKind::t2;
        plan.f = plan.g = f;
        plan.m = plan.n = 100;
        plan.replications = 2000;
        plan.seed = 704;
        auto est = mc_power(plan);
        REQUIRE(est.rate > 0.035);
        REQUIRE(est.rate < 0.07);
    }

    SECTION("singular pooled covariance names a remedy") {
        Sample x(3, 2, {0.0, 0.0, 1.0, 2.0, 2.0, 4.0});
        Sample y(3, 2, {0.0, 0.0, 1.0, 2.0, 3.0, 6.0});
        try {
            hotelling_t2_test(x, y, 0.05);
            FAIL("expected numeric_error");
        } catch (const numeric_error& e) {
            std::string msg = e.what();
            REQUIRE(msg.find("singular") != std::string::npos);
            REQUIRE(msg.find("more observations") != std::string::npos);
        }
    }
}

TEST_CASE("oja rank vector", "[competitors]") {
    OjaConfig exact;

    SECTION("d = 1 reduces to centred sign counts") {
        RngStream rng(710, 0);
        Sample pooled(15, 1);
        for (std::size_t i = 0; i < 15; ++i) pooled(i, 0) = rng.next_normal();
        for (double z : {-2.0, -0.1, 0.7, 3.0}) {
            Vector zv{z};
            auto r = oja_rank_vector(zv, pooled, exact);
            double expect = 0.0;
            for (std::size_t i = 0; i < 15; ++i)
                expect += (z > pooled(i, 0)) - (z < pooled(i, 0));
            expect /= 15.0;
            REQUIRE(r[0] == Approx(expect).margin(1e-14));
        }
    }

    SECTION("centre of a symmetric cloud has rank vector zero") {
        RngStream rng(711, 0);
        const Vector c{1.5, -2.0};
        Sample pooled(16, 2);
        for (std::size_t i = 0; i < 8; ++i) {
            double vx = rng.next_normal(), vy = rng.next_normal();
            pooled(2 * i, 0) = c[0] + vx;
            pooled(2 * i, 1) = c[1] + vy;
            pooled(2 * i + 1, 0) = c[0] - vx;
            pooled(2 * i + 1, 1) = c[1] - vy;
        }
        auto r = oja_rank_vector(c, pooled, exact);
        REQUIRE(std::fabs(r[0]) < 1e-12);
        REQUIRE(std::fabs(r[1]) < 1e-12);
    }

    SECTION("subset sampling is consistent with exact enumeration") {
        Sample pooled = gaussian_sample(12, 2, 712);
        Vector z{0.3, -0.4};
        auto r_exact = oja_rank_vector(z, pooled, exact);
        OjaConfig sampled;
        sampled.mode = OjaConfig::Mode::subset_sampled;
        sampled.n_subsets = 40000;
        sampled.seed = 713;
        auto r_mc = oja_rank_vector(z, pooled, sampled);
        REQUIRE(r_mc[0] == Approx(r_exact[0]).margin(0.05));
        REQUIRE(r_mc[1] == Approx(r_exact[1]).margin(0.05));
    }

    SECTION("exact enumeration over budget raises") {
        Sample pooled = gaussian_sample(40, 2, 714);
        Vector z{0.0, 0.0};
        OjaConfig tiny;
        tiny.enumeration_budget = 100; // C(40,2) = 780 > 100
        REQUIRE_THROWS_AS(oja_rank_vector(z, pooled, tiny), unsupported_error);
    }
}

TEST_CASE("oja test", "[competitors]") {
    OjaConfig exact;

    SECTION("swapping the samples leaves the statistic unchanged") {
        Sample x = gaussian_sample(14, 2, 720);
        Sample y = gaussian_sample(10, 2, 721, 0.8);
        double o1 = oja_test(x, y, exact, 0.05).statistic;
        double o2 = oja_test(y, x, exact, 0.05).statistic;
        REQUIRE(o2 == Approx(o1).margin(1e-10 * (1.0 + o1)));
    }

    SECTION("affine invariance of the exact statistic") {
        Sample x = gaussian_sample(12, 2, 722);
        Sample y = gaussian_sample(12, 2, 723, 0.5);
        Matrix a(2, 2, {1.4, -0.3, 0.9, 0.7});
        Vector b{2.0, 5.0};
        auto apply = [&](const Sample& s) {
            Sample out(s.rows(), 2);
            for (std::size_t i = 0; i < s.rows(); ++i) {
                auto v = matvec(a, s.row(i));
                out(i, 0) = v[0] + b[0];
                out(i, 1) = v[1] + b[1];
            }
            return out;
        };
        double o1 = oja_test(x, y, exact, 0.05).statistic;
        double o2 = oja_test(apply(x), apply(y), exact, 0.05).statistic;
        REQUIRE(o2 == Approx(o1).margin(1e-8 * (1.0 + o1)));
    }

    SECTION("null size near alpha at m = n = 30") {
        SimPlan plan;
        plan.test = TestKind::oja;
        plan.m = plan.n = 30;
        plan.replications = 1000;
        plan.seed = 724;
        auto est = mc_power(plan);
        REQUIRE(est.rate > 0.03);
        REQUIRE(est.rate < 0.08);
    }

    SECTION("location-scale power point from the reference table") {
        SimPlan plan;
        plan.test = TestKind::oja;
        plan.g = alternative_family(AlternativeFamily::location_scale, 0.25);
        plan.m = plan.n = 100;
        plan.replications = 2000;
        plan.seed = 725;
        auto est = mc_power(plan);
        REQUIRE(est.rate == Approx(0.430).margin(0.04));
    }

    SECTION("degenerate rank covariance raises") {
        // All pooled points on a line: every rank vector is proportional to
        // the same normal, so B_N is singular.
        Sample x(3, 2, {0.0, 0.0, 1.0, 1.0, 2.0, 2.0});
        Sample y(3, 2, {3.0, 3.0, 4.0, 4.0, 5.0, 5.0});
        REQUIRE_THROWS_AS(oja_test(x, y, exact, 0.05), numeric_error);
    }
}
