#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "perclab/experiments.hpp"

using namespace perclab;

TEST_CASE("gnp endpoints and determinism") {
    CHECK(sample_gnp(20, 0.0, 1).edge_count() == 0);
    CHECK(sample_gnp(20, 1.0, 1).complete());
    CHECK(sample_gnp(40, 0.3, 99) == sample_gnp(40, 0.3, 99));
    CHECK_FALSE(sample_gnp(40, 0.3, 99) == sample_gnp(40, 0.3, 100));
    CHECK_THROWS_AS(sample_gnp(10, -0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_gnp(10, 1.1, 1), std::invalid_argument);
}

TEST_CASE("gnp edge count sits within four standard deviations") {
    const int n = 1000;
    const double p = 0.01;
    Graph g = sample_gnp(n, p, 123456789);
    double pairs = n * (n - 1) / 2.0;
    double mean = pairs * p;
    double sd = std::sqrt(pairs * p * (1 - p));
    CHECK(std::abs(g.edge_count() - mean) < 4 * sd);
}

TEST_CASE("shared pair uniforms nest samples across p") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph lo = sample_gnp(60, 0.1, seed);
        Graph mid = sample_gnp(60, 0.2, seed);
        Graph hi = sample_gnp(60, 0.5, seed);
        REQUIRE(lo.subgraph_of(mid));
        REQUIRE(mid.subgraph_of(hi));
    }
}

TEST_CASE("percolation probability endpoints") {
    TrialConfig sure{10, 4, 1.0, 20, 7};
    CHECK(percolation_probability(sure).fraction == 1.0);

    TrialConfig never{10, 4, 0.0, 20, 7};
    CHECK(percolation_probability(never).fraction == 0.0);

    // below t + 2 vertices the fraction is exactly the chance of sampling
    // a complete graph
    TrialConfig tiny{4, 4, 0.5, 400, 11};
    auto est = percolation_probability(tiny);
    long long complete_draws = 0;
    for (int i = 0; i < tiny.trials; ++i)
        if (sample_gnp(tiny.n, tiny.p, rng::trial_seed(tiny.master_seed, i)).complete())
            ++complete_draws;
    CHECK(est.successes == complete_draws);
    CHECK_THROWS_AS(percolation_probability(TrialConfig{5, 4, 0.5, 0, 1}),
                    std::invalid_argument);
}

TEST_CASE("fraction is independent of the worker count") {
    TrialConfig cfg{30, 4, 0.2, 120, 31415};
    auto one = percolation_probability(cfg, 1);
    auto two = percolation_probability(cfg, 2);
    auto five = percolation_probability(cfg, 5);
    CHECK(one.successes == two.successes);
    CHECK(one.successes == five.successes);
    CHECK(one.ci_lo == two.ci_lo);
    CHECK(one.ci_hi == five.ci_hi);
}

TEST_CASE("coupled fractions are monotone in p") {
    // same trial seeds at every p: nested samples make the per-trial
    // indicator monotone, so the fraction cannot decrease
    const int trials = 60;
    double prev = -1.0;
    for (double p : {0.02, 0.05, 0.08, 0.12, 0.2, 0.35, 0.6, 1.0}) {
        TrialConfig cfg{24, 4, p, trials, 2718};
        double f = percolation_probability(cfg).fraction;
        REQUIRE(f >= prev);
        prev = f;
    }
}

TEST_CASE("threshold estimation brackets the target") {
    auto est = estimate_pc(50, 4, 60, 0.1, 424242, 2);
    CHECK(est.p_lo < est.p_hat);
    CHECK(est.p_hat < est.p_hi);
    CHECK(est.frac_lo < 0.5);
    CHECK(est.frac_hi >= 0.5);
    CHECK(est.p_hi - est.p_lo < 0.1 * est.p_hat);

    CHECK_THROWS_AS(estimate_pc(5, 4, 10, 0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_pc(50, 4, 10, -1.0, 1), std::invalid_argument);
}

TEST_CASE("threshold estimation is deterministic across worker counts") {
    auto a = estimate_pc(40, 4, 40, 0.2, 606, 1);
    auto b = estimate_pc(40, 4, 40, 0.2, 606, 3);
    CHECK(a.p_lo == b.p_lo);
    CHECK(a.p_hi == b.p_hi);
    CHECK(a.p_hat == b.p_hat);
    CHECK(a.steps == b.steps);
}

TEST_CASE("exponent fit recovers exact power laws") {
    std::vector<ThresholdEstimate> pts;
    for (int n : {100, 200, 400, 800}) {
        ThresholdEstimate e;
        e.n = n;
        e.t = 4;
        e.p_hat = std::pow(n, -10.0 / 13.0);
        pts.push_back(e);
    }
    auto fit = fit_exponent(pts);
    CHECK(std::abs(fit.slope - (-10.0 / 13.0)) < 1e-12);
    CHECK(fit.residual < 1e-12);
    CHECK(fit.bracket_upper_exponent == Rational(-10, 13));
    CHECK(fit.bracket_lower_exponent == Rational(-4, 5));
}

TEST_CASE("exponent fit tolerates noise") {
    std::vector<ThresholdEstimate> pts;
    std::uint64_t k = 0;
    for (int n : {100, 200, 400, 800, 1600, 3200}) {
        ThresholdEstimate e;
        e.n = n;
        e.t = 5;
        double noise = (static_cast<double>(rng::at(5150, k++) >> 11) /
                            9007199254740992.0 -
                        0.5) *
                       0.02;
        e.p_hat = 3.0 * std::pow(n, -0.8) * (1.0 + noise);
        pts.push_back(e);
    }
    auto fit = fit_exponent(pts);
    CHECK(std::abs(fit.slope + 0.8) < 0.02);

    pts.resize(2);
    CHECK_THROWS_AS(fit_exponent(pts), std::invalid_argument);
}
