#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "depthrank/competitors.hpp"
#include "depthrank/model.hpp"
#include "depthrank/parallel.hpp"
#include "depthrank/powergrid.hpp"
#include "depthrank/ranksum.hpp"
#include "depthrank/theory.hpp"

// Seeded Monte Carlo power estimation and the desk-scale reproduction
// drivers for the reference tables and figures. Replication r consumes
// RngStream(seed, r) for everything it needs (both samples, then any
// direction or subset sampling), so estimates do not depend on scheduling
// or thread count.

namespace depthrank {

enum class TestKind { q, t2, oja };

inline const char* test_name(TestKind t) {
    switch (t) {
        case TestKind::q: return "q";
        case TestKind::t2: return "t2";
        case TestKind::oja: return "oja";
    }
    return "?";
}

inline TestKind test_from_name(const std::string& s) {
    if (s == "q") return TestKind::q;
    if (s == "t2") return TestKind::t2;
    if (s == "oja") return TestKind::oja;
    throw std::domain_error("unknown test kind: " + s);
}

struct SimPlan {
    TestKind test = TestKind::q;
    DepthSpec depth;                       // q only
    GaussianMixture f = GaussianMixture::standard(2);
    GaussianMixture g = GaussianMixture::standard(2);
    std::size_t m = 100, n = 100;
    double alpha = 0.05;
    long replications = 1000;
    std::uint64_t seed = 0;
    OjaConfig oja;                         // oja only
};

struct McEstimate {
    double rate = 0.0;
    double mc_se = 0.0;
};

// Fraction of replications in which the chosen test rejects, with its
// binomial standard error sqrt(r(1-r)/reps).
inline McEstimate mc_power(const SimPlan& plan, int threads = 0) {
    if (plan.replications < 1)
        throw std::domain_error("mc_power: replications must be >= 1");
    if (plan.f.dim() != plan.g.dim())
        throw data_error("mc_power: F and G dimensions differ");

    const std::size_t reps = static_cast<std::size_t>(plan.replications);
    std::vector<unsigned char> rejected(reps, 0);

    parallel_for(reps, threads, [&](std::size_t r) {
        try {
            RngStream rng(plan.seed, static_cast<std::uint64_t>(r));
            Sample x = sample(plan.f, plan.m, rng);
            Sample y = sample(plan.g, plan.n, rng);
            bool rej = false;
            switch (plan.test) {
                case TestKind::q:
                    rej = null_test(x, y, plan.depth, plan.alpha, &rng).reject;
                    break;
                case TestKind::t2:
                    rej = hotelling_t2_test(x, y, plan.alpha).reject;
                    break;
                case TestKind::oja:
                    rej = oja_test(x, y, plan.oja, plan.alpha, &rng).reject;
                    break;
            }
            rejected[r] = rej ? 1 : 0;
        } catch (const std::exception& e) {
            throw numeric_error("mc_power: replication " + std::to_string(r) + ": " +
                                e.what());
        }
    });

    std::size_t hits = 0;
    for (auto v : rejected) hits += v;
    McEstimate est;
    est.rate = static_cast<double>(hits) / static_cast<double>(reps);
    est.mc_se = std::sqrt(est.rate * (1.0 - est.rate) / static_cast<double>(reps));
    return est;
}

enum class ReproTarget { table1, table2, table3, table4, fig1, fig2 };
enum class ReproBudget { paper, quick };

inline const char* target_name(ReproTarget t) {
    switch (t) {
        case ReproTarget::table1: return "table1";
        case ReproTarget::table2: return "table2";
        case ReproTarget::table3: return "table3";
        case ReproTarget::table4: return "table4";
        case ReproTarget::fig1: return "fig1";
        case ReproTarget::fig2: return "fig2";
    }
    return "?";
}

inline ReproTarget target_from_name(const std::string& s) {
    if (s == "table1") return ReproTarget::table1;
    if (s == "table2") return ReproTarget::table2;
    if (s == "table3") return ReproTarget::table3;
    if (s == "table4") return ReproTarget::table4;
    if (s == "fig1") return ReproTarget::fig1;
    if (s == "fig2") return ReproTarget::fig2;
    throw std::domain_error(
        "unknown reproduction target: " + s +
        " (valid: table1, table2, table3, table4, fig1, fig2)");
}

struct ReproManifest {
    std::string target;
    std::string budget;
    std::uint64_t seed = 0;
    long mc_replications = 0; // 0 when the target is fully analytic
    int threads = 0;
    double wall_time_s = 0.0;
};

struct ReproResult {
    PowerGrid grid;
    ReproManifest manifest;
};

namespace detail {

inline const std::vector<double>& table_u_grid() {
    static const std::vector<double> g{0.0, 0.15, 0.20, 0.25, 0.30, 0.35};
    return g;
}

inline const std::vector<double>& table_s2_grid() {
    static const std::vector<double> g{1.0, 1.2, 1.4, 1.6, 1.8, 2.0};
    return g;
}

inline AlternativeFamily target_family(ReproTarget t) {
    switch (t) {
        case ReproTarget::table1: return AlternativeFamily::contaminated_location;
        case ReproTarget::table2: return AlternativeFamily::contaminated_scale;
        case ReproTarget::table3: return AlternativeFamily::location_scale;
        default: throw std::domain_error("target has no single family");
    }
}

} // namespace detail

// Reproduces one table or figure. Tables 1-3 combine the analytic power of
// the T^2 and Q tests with a Monte Carlo estimate for the Oja test; table 4
// is fully Monte Carlo at m = n = 25 with approximate projection depth
// (Med, MAD, 1000 directions). The quick budget trims replications so a full
// pass stays interactive.
inline ReproResult reproduce(ReproTarget target, ReproBudget budget,
                             std::uint64_t seed = 20060346, int threads = 0) {
    auto t_start = std::chrono::steady_clock::now();
    ReproResult out;
    out.grid.target = target_name(target);
    out.manifest.target = target_name(target);
    out.manifest.budget = (budget == ReproBudget::paper) ? "paper" : "quick";
    out.manifest.seed = seed;
    out.manifest.threads = static_cast<int>(resolve_threads(threads));
    const bool paper = budget == ReproBudget::paper;
    char label[64];

    switch (target) {
        case ReproTarget::table1:
        case ReproTarget::table2:
        case ReproTarget::table3: {
            const AlternativeFamily family = detail::target_family(target);
            const auto& grid = (target == ReproTarget::table2) ? detail::table_s2_grid()
                                                               : detail::table_u_grid();
            const long oja_reps = paper ? 2000 : 200;
            out.manifest.mc_replications = oja_reps;
            for (std::size_t nn : {std::size_t{100}, std::size_t{200}}) {
                for (double param : grid) {
                    PowerQuery query{family, param, nn, nn, 0.05};
                    std::snprintf(label, sizeof(label), "t2[n=%zu]", nn);
                    out.grid.cells.push_back({param, label, beta_t2(query), 0.0, false});
                    std::snprintf(label, sizeof(label), "q[n=%zu]", nn);
                    out.grid.cells.push_back({param, label, beta_q(query), 0.0, false});

                    SimPlan plan;
                    plan.test = TestKind::oja;
                    plan.g = alternative_family(family, param);
                    plan.m = plan.n = nn;
                    plan.replications = oja_reps;
                    plan.seed = seed;
                    auto est = mc_power(plan, threads);
                    std::snprintf(label, sizeof(label), "oja[n=%zu]", nn);
                    out.grid.cells.push_back({param, label, est.rate, est.mc_se, true});
                }
            }
            break;
        }
        case ReproTarget::table4: {
            const long reps = paper ? 1000 : 200;
            out.manifest.mc_replications = reps;
            DepthSpec pd;
            pd.method = DepthMethod::projection;
            pd.mode = DepthMode::approximate;
            pd.scale = ProjectionScale::med_mad;
            pd.n_directions = 1000;
            const ReproTarget blocks[] = {ReproTarget::table1, ReproTarget::table2,
                                          ReproTarget::table3};
            for (ReproTarget block : blocks) {
                const AlternativeFamily family = detail::target_family(block);
                const auto& grid = (block == ReproTarget::table2)
                                       ? detail::table_s2_grid()
                                       : detail::table_u_grid();
                for (double param : grid) {
                    SimPlan plan;
                    plan.g = alternative_family(family, param);
                    plan.m = plan.n = 25;
                    plan.replications = reps;
                    plan.seed = seed;

                    plan.test = TestKind::t2;
                    auto t2 = mc_power(plan, threads);
                    std::snprintf(label, sizeof(label), "t2[%s]", family_name(family));
                    out.grid.cells.push_back({param, label, t2.rate, t2.mc_se, true});

                    plan.test = TestKind::q;
                    plan.depth = pd;
                    auto q = mc_power(plan, threads);
                    std::snprintf(label, sizeof(label), "q[%s]", family_name(family));
                    out.grid.cells.push_back({param, label, q.rate, q.mc_se, true});

                    plan.test = TestKind::oja;
                    auto oja = mc_power(plan, threads);
                    std::snprintf(label, sizeof(label), "oja[%s]", family_name(family));
                    out.grid.cells.push_back({param, label, oja.rate, oja.mc_se, true});
                }
            }
            break;
        }
        case ReproTarget::fig1:
            out.grid = figure_grid(Figure::fig1);
            break;
        case ReproTarget::fig2: {
            out.grid = figure_grid(Figure::fig2);
            const long reps = paper ? 2000 : 200;
            out.manifest.mc_replications = reps;
            for (int si = 0; si <= 20; ++si) {
                double s2 = 1.0 + 0.1 * si;
                SimPlan plan;
                plan.test = TestKind::oja;
                plan.g = alternative_family(AlternativeFamily::pure_scale, s2);
                plan.m = plan.n = 100;
                plan.replications = reps;
                plan.seed = seed;
                auto est = mc_power(plan, threads);
                out.grid.cells.push_back({s2, "oja", est.rate, est.mc_se, true});
            }
            break;
        }
    }

    out.manifest.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return out;
}

} // namespace depthrank
