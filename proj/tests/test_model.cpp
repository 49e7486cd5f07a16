#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "depthrank/mixture_json.hpp"
#include "depthrank/model.hpp"
#include "oracles.hpp"

using namespace depthrank;
using Catch::Approx;

TEST_CASE("rng streams", "[model]") {
    SECTION("identical (seed, stream) replays bit-identically") {
        RngStream a(42, 7), b(42, 7);
        for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());
        RngStream c(42, 7), d(42, 7);
        for (int i = 0; i < 1000; ++i) {
            REQUIRE(c.next_double() == d.next_double());
            REQUIRE(c.next_normal() == d.next_normal());
        }
    }
    SECTION("distinct streams do not collide (spot check)") {
        std::set<std::uint64_t> seen;
        for (std::uint64_t s = 0; s < 50; ++s) {
            RngStream r(42, s);
            for (int i = 0; i < 200; ++i) seen.insert(r.next_u64());
        }
        REQUIRE(seen.size() == 50 * 200);
    }
    SECTION("uniform doubles lie in [0,1) and normals look standard") {
        RngStream r(3, 0);
        const int n = 200000;
        double sum = 0.0, sum2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double u = r.next_double();
            REQUIRE(u >= 0.0);
            REQUIRE(u < 1.0);
            double z = r.next_normal();
            sum += z;
            sum2 += z * z;
        }
        double mean = sum / n, var = sum2 / n - mean * mean;
        REQUIRE(std::fabs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
        REQUIRE(std::fabs(var - 1.0) < 4.0 * std::sqrt(2.0 / n));
    }
}

TEST_CASE("mixture construction", "[model]") {
    SECTION("weights must sum to one") {
        REQUIRE_THROWS_AS(
            GaussianMixture(2, {GaussianComponent{0.5, Vector{0, 0}, Matrix::identity(2)},
                                GaussianComponent{0.4, Vector{0, 0}, Matrix::identity(2)}}),
            data_error);
    }
    SECTION("zero-weight components are rejected") {
        REQUIRE_THROWS_AS(
            GaussianMixture(2, {GaussianComponent{1.0, Vector{0, 0}, Matrix::identity(2)},
                                GaussianComponent{0.0, Vector{1, 1}, Matrix::identity(2)}}),
            data_error);
    }
    SECTION("covariances must admit a Cholesky factor") {
        Matrix bad(2, 2, {1.0, 2.0, 2.0, 1.0});
        REQUIRE_THROWS_AS(GaussianMixture::single(Vector{0, 0}, bad), data_error);
    }
    SECTION("dimension mismatch") {
        REQUIRE_THROWS_AS(
            GaussianMixture(3, {GaussianComponent{1.0, Vector{0, 0}, Matrix::identity(2)}}),
            data_error);
    }
}

TEST_CASE("mixture sampling", "[model]") {
    SECTION("near-degenerate concentration") {
        Matrix tiny(2, 2, {1e-12, 0.0, 0.0, 1e-12});
        auto mix = GaussianMixture::single(Vector{3.0, 3.0}, tiny);
        RngStream rng(5, 0);
        Sample s = sample(mix, 100, rng);
        for (std::size_t i = 0; i < s.rows(); ++i) {
            REQUIRE(s(i, 0) == Approx(3.0).margin(1e-4));
            REQUIRE(s(i, 1) == Approx(3.0).margin(1e-4));
        }
    }
    SECTION("CLT check on the standard normal") {
        auto mix = GaussianMixture::standard(2);
        RngStream rng(6, 0);
        const std::size_t n = 100000;
        Sample s = sample(mix, n, rng);
        double c0 = 0.0, c1 = 0.0;
        for (std::size_t i = 0; i < n; ++i) { c0 += s(i, 0); c1 += s(i, 1); }
        double bound = 4.0 / std::sqrt(static_cast<double>(n));
        REQUIRE(std::fabs(c0 / n) < bound);
        REQUIRE(std::fabs(c1 / n) < bound);
    }
    SECTION("component selection frequency matches the weights") {
        // Widely separated means so draws are attributable to a component.
        auto mix = GaussianMixture(
            1, {GaussianComponent{0.9, Vector{0.0}, Matrix(1, 1, {1.0})},
                GaussianComponent{0.1, Vector{100.0}, Matrix(1, 1, {1.0})}});
        RngStream rng(7, 0);
        const std::size_t n = 100000;
        Sample s = sample(mix, n, rng);
        std::size_t first = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (s(i, 0) < 50.0) ++first;
        double freq = static_cast<double>(first) / static_cast<double>(n);
        REQUIRE(freq == Approx(0.9).margin(0.004)); // ~4 binomial se
    }
    SECTION("bit-identical replay with an equal stream") {
        auto mix = alternative_family(AlternativeFamily::contaminated_location, 0.25);
        RngStream r1(9, 3), r2(9, 3);
        Sample a = sample(mix, 500, r1);
        Sample b = sample(mix, 500, r2);
        REQUIRE(a.data() == b.data());
    }
    SECTION("correlated covariance is honoured") {
        Matrix cov(2, 2, {2.0, 0.8, 0.8, 1.0});
        auto mix = GaussianMixture::single(Vector{0.0, 0.0}, cov);
        RngStream rng(10, 0);
        const std::size_t n = 200000;
        Sample s = sample(mix, n, rng);
        auto [mean, c] = sample_mean_cov(s);
        REQUIRE(c(0, 0) == Approx(2.0).margin(0.05));
        REQUIRE(c(0, 1) == Approx(0.8).margin(0.05));
        REQUIRE(c(1, 1) == Approx(1.0).margin(0.05));
    }
}

TEST_CASE("alternative families", "[model]") {
    SECTION("contaminated location at u = 0 is the null") {
        auto g = alternative_family(AlternativeFamily::contaminated_location, 0.0);
        for (const auto& c : g.components()) {
            REQUIRE(c.mean[0] == 0.0);
            REQUIRE(c.mean[1] == 0.0);
            REQUIRE(c.cov(0, 0) == Approx(1.0));
            REQUIRE(c.cov(1, 1) == Approx(1.0));
            REQUIRE(c.cov(0, 1) == 0.0);
        }
    }
    SECTION("contaminated location variance inflation 1 + 160u") {
        auto g = alternative_family(AlternativeFamily::contaminated_location, 0.25);
        REQUIRE(g.components().size() == 2);
        REQUIRE(g.components()[0].weight == Approx(0.9));
        REQUIRE(g.components()[0].mean[0] == Approx(0.25));
        REQUIRE(g.components()[1].weight == Approx(0.1));
        REQUIRE(g.components()[1].cov(0, 0) == Approx(1.0 + 160.0 * 0.25));
    }
    SECTION("contaminated scale at sigma^2 = 1 is the null") {
        auto g = alternative_family(AlternativeFamily::contaminated_scale, 1.0);
        for (const auto& c : g.components()) {
            REQUIRE(c.mean[0] == Approx(0.0).margin(1e-15));
            REQUIRE(c.cov(0, 0) == Approx(1.0));
        }
    }
    SECTION("contaminated scale couples u = sigma - 1") {
        auto g = alternative_family(AlternativeFamily::contaminated_scale, 1.44);
        REQUIRE(g.components()[0].cov(0, 0) == Approx(1.44));
        REQUIRE(g.components()[1].mean[0] == Approx(0.2));
    }
    SECTION("location-scale ties sigma = u + 1") {
        auto g = alternative_family(AlternativeFamily::location_scale, 0.35);
        REQUIRE(g.components().size() == 1);
        REQUIRE(g.components()[0].mean[0] == Approx(0.35));
        REQUIRE(g.components()[0].cov(0, 0) == Approx(1.35 * 1.35));
        REQUIRE(g.components()[0].cov(0, 1) == 0.0);
    }
    SECTION("name round trip") {
        for (auto f : {AlternativeFamily::contaminated_location,
                       AlternativeFamily::contaminated_scale,
                       AlternativeFamily::location_scale,
                       AlternativeFamily::pure_location, AlternativeFamily::pure_scale})
            REQUIRE(family_from_name(family_name(f)) == f);
        REQUIRE_THROWS_AS(family_from_name("banana"), std::domain_error);
    }
}

TEST_CASE("mixture json round trip", "[model]") {
    auto g = alternative_family(AlternativeFamily::contaminated_scale, 1.8);
    auto j = mixture_to_json(g);
    REQUIRE(j["dim"] == 2);
    REQUIRE(j["components"].size() == 2);
    auto back = mixture_from_json(j);
    REQUIRE(back.dim() == g.dim());
    for (std::size_t k = 0; k < 2; ++k) {
        REQUIRE(back.components()[k].weight == g.components()[k].weight);
        REQUIRE(back.components()[k].mean == g.components()[k].mean);
        REQUIRE(back.components()[k].cov.data() == g.components()[k].cov.data());
    }
    SECTION("malformed documents are rejected") {
        nlohmann::json bad = {{"dim", 2}};
        REQUIRE_THROWS_AS(mixture_from_json(bad), data_error);
    }
}
