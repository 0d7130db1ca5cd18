#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "perclab/density.hpp"
#include "perclab/parallel.hpp"
#include "perclab/quotient_closure.hpp"
#include "perclab/random_graph.hpp"
#include "perclab/rational.hpp"

namespace perclab {

struct TrialConfig {
    int n = 0;
    int t = 4;
    double p = 0.0;
    int trials = 0;
    std::uint64_t master_seed = 0;
};

struct FractionEstimate {
    long long successes = 0;
    long long trials = 0;
    double fraction = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
};

namespace detail {

// Wilson score interval at 95%
inline void wilson_interval(long long k, long long n, double& lo, double& hi) {
    const double z = 1.959963984540054;
    double f = static_cast<double>(k) / static_cast<double>(n);
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (f + z2 / (2.0 * n)) / denom;
    double half = z * std::sqrt(f * (1.0 - f) / n + z2 / (4.0 * n * n)) / denom;
    lo = std::max(0.0, center - half);
    hi = std::min(1.0, center + half);
}

}  // namespace detail

/// Fraction of trials whose sample percolates. Trial i draws its graph
/// from the substream (master_seed, i), so the outcome set is a pure
/// function of the config, whatever the worker count.
inline FractionEstimate percolation_probability(const TrialConfig& cfg, int workers = 1) {
    if (cfg.trials < 1)
        throw std::invalid_argument("percolation_probability: need at least one trial");
    FractionEstimate out;
    out.trials = cfg.trials;
    out.successes = parallel_count(cfg.trials, workers, [&](long long i) {
        Graph g = sample_gnp(cfg.n, cfg.p, rng::trial_seed(cfg.master_seed, i));
        return percolates(g, cfg.t);
    });
    out.fraction = static_cast<double>(out.successes) / static_cast<double>(out.trials);
    detail::wilson_interval(out.successes, out.trials, out.ci_lo, out.ci_hi);
    return out;
}

struct ThresholdEstimate {
    int n = 0;
    int t = 4;
    double p_lo = 0.0;
    double p_hi = 1.0;
    double p_hat = 0.0;
    double target_prob = 0.5;
    int trials_per_step = 0;
    std::uint64_t seed = 0;
    double frac_lo = 0.0;  // measured percolation fraction at p_lo
    double frac_hi = 1.0;  // measured percolation fraction at p_hi
    int steps = 0;
};

/// Bisection estimate of the probability at which the percolation
/// fraction crosses `target_prob`. Valid because percolation is monotone
/// in p: closures are monotone in the edge set and the per-pair uniforms
/// couple the samples across p. The initial bracket pads the theoretical
/// bounds n^{-t/(2t-3)} and n^{-1/eta(t)} by a decade each way and is
/// widened further if the measured fractions do not straddle the target.
inline ThresholdEstimate estimate_pc(int n, int t, int trials_per_step, double tolerance,
                                     std::uint64_t seed, int workers = 1,
                                     double target_prob = 0.5) {
    if (t < 4)
        throw std::invalid_argument("estimate_pc: t must be at least 4");
    if (n < t + 2)
        throw std::invalid_argument(
            "estimate_pc: n below t + 2 cannot percolate without sampling a complete graph");
    if (trials_per_step < 1 || tolerance <= 0.0)
        throw std::invalid_argument("estimate_pc: bad trials or tolerance");

    ThresholdEstimate est;
    est.n = n;
    est.t = t;
    est.target_prob = target_prob;
    est.trials_per_step = trials_per_step;
    est.seed = seed;

    int step = 0;
    auto fraction_at = [&](double p) {
        TrialConfig cfg;
        cfg.n = n;
        cfg.t = t;
        cfg.p = p;
        cfg.trials = trials_per_step;
        cfg.master_seed = rng::at(seed, static_cast<std::uint64_t>(step++));
        return percolation_probability(cfg, workers).fraction;
    };

    double lower_exp = static_cast<double>(t) / (2.0 * t - 3.0);
    double upper_exp = 1.0 / eta(t).to_double();
    est.p_lo = std::pow(n, -lower_exp) / 10.0;
    est.p_hi = std::min(1.0, 10.0 * std::pow(n, -upper_exp));

    est.frac_lo = fraction_at(est.p_lo);
    for (int widen = 0; est.frac_lo >= target_prob; ++widen) {
        if (widen >= 6 || est.p_lo < 1e-12)
            throw std::runtime_error("estimate_pc: no lower bracket in [0,1]");
        est.p_lo /= 10.0;
        est.frac_lo = fraction_at(est.p_lo);
    }
    est.frac_hi = fraction_at(est.p_hi);
    for (int widen = 0; est.frac_hi <= target_prob; ++widen) {
        if (est.p_hi >= 1.0 || widen >= 6)
            throw std::runtime_error("estimate_pc: no upper bracket in [0,1]");
        est.p_hi = std::min(1.0, est.p_hi * 10.0);
        est.frac_hi = fraction_at(est.p_hi);
    }

    est.p_hat = std::sqrt(est.p_lo * est.p_hi);
    while (est.p_hi - est.p_lo >= tolerance * est.p_hat) {
        double mid = std::sqrt(est.p_lo * est.p_hi);
        double f = fraction_at(mid);
        if (f < target_prob) {
            est.p_lo = mid;
            est.frac_lo = f;
        } else {
            est.p_hi = mid;
            est.frac_hi = f;
        }
        est.p_hat = std::sqrt(est.p_lo * est.p_hi);
    }
    est.steps = step;
    return est;
}

struct ExponentFit {
    std::vector<std::pair<int, double>> points;  // (n, p_hat)
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // RMS residual of log p_hat
    Rational bracket_upper_exponent;  // -1/eta(t)
    Rational bracket_lower_exponent;  // -t/(2t-3)
};

/// Least-squares fit of log p_hat against log n, reported alongside the
/// two theoretical bracketing exponents.
inline ExponentFit fit_exponent(const std::vector<ThresholdEstimate>& estimates) {
    std::vector<int> ns;
    for (const auto& e : estimates)
        if (std::find(ns.begin(), ns.end(), e.n) == ns.end())
            ns.push_back(e.n);
    if (ns.size() < 3)
        throw std::invalid_argument("fit_exponent: need at least 3 distinct n values");

    ExponentFit fit;
    int t = estimates.front().t;
    for (const auto& e : estimates) {
        if (e.t != t)
            throw std::invalid_argument("fit_exponent: estimates mix different t values");
        fit.points.emplace_back(e.n, e.p_hat);
    }

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = static_cast<double>(fit.points.size());
    for (auto [n, p] : fit.points) {
        double x = std::log(static_cast<double>(n));
        double y = std::log(p);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    fit.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / k;

    double ss = 0;
    for (auto [n, p] : fit.points) {
        double r = std::log(p) - (fit.intercept + fit.slope * std::log(static_cast<double>(n)));
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / k);

    Rational e = eta(t);
    fit.bracket_upper_exponent = Rational(-e.den(), e.num());
    fit.bracket_lower_exponent = Rational(-static_cast<std::int64_t>(t), 2 * t - 3);
    return fit;
}

}  // namespace perclab
