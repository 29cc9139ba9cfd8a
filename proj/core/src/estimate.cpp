#include "busca/estimate.hpp"

#include <algorithm>
#include <cmath>

#include "busca/stats.hpp"

namespace busca {

namespace {

double relative_change(double from, double to) {
    const double scale = std::max({std::abs(from), std::abs(to), 1e-12});
    return std::abs(to - from) / scale;
}

double median_gap(const EventSeries& series) {
    const auto ts = series.timestamps();
    std::vector<double> gaps;
    gaps.reserve(ts.size() - 1);
    for (std::size_t i = 1; i < ts.size(); ++i) gaps.push_back(ts[i] - ts[i - 1]);
    return median(std::move(gaps));
}

} // namespace

double burstiness_scale(double lambda_p, double window_length, std::size_t n) {
    const double psi = (1.0 - lambda_p * window_length / static_cast<double>(n)) * 100.0;
    return std::clamp(psi, 0.0, 100.0);
}

MixtureFit fit_em(const EventSeries& series, const EmConfig& config) {
    if (series.size() < 2)
        throw_error(ErrorKind::kInvalidArgument, "fit_em requires n >= 2");
    if (config.max_iterations < 1 || !(config.convergence_tol > 0.0))
        throw_error(ErrorKind::kInvalidArgument, "invalid EM configuration");

    const double n = static_cast<double>(series.size());
    const double span = series.last() - series.window_start();
    const double lambda_hi = n / span;
    const double mu_lo = series.window_length() / (10.0 * n);
    const double mu_hi = span;

    const auto objective = [&](double lambda, double mu) {
        const MixtureParams trial{lambda, mu};
        return expected_loglik(series, trial,
                               compute_estep(series, trial, config.truncation_depth));
    };

    double lambda = 0.5 * lambda_hi;
    double mu = std::clamp(median_gap(series), mu_lo, mu_hi);

    MixtureFit fit;
    for (int iter = 1; iter <= config.max_iterations; ++iter) {
        const double lambda_before = lambda;
        const double mu_before = mu;
        for (int sweep = 0; sweep < 2; ++sweep) {
            lambda = golden_section_max(
                         [&](double x) { return objective(x, mu); }, 0.0, lambda_hi)
                         .x;
            mu = std::exp(golden_section_max(
                              [&](double z) { return objective(lambda, std::exp(z)); },
                              std::log(mu_lo), std::log(mu_hi))
                              .x);
        }
        fit.em_iterations = iter;
        const double rel = std::max(relative_change(lambda_before, lambda),
                                    relative_change(mu_before, mu));
        if (rel < config.convergence_tol) {
            fit.converged = true;
            break;
        }
    }

    fit.params = MixtureParams{lambda, mu};
    if (config.refine_mu) {
        fit.params.mu = refine_mu(series, lambda, config.refine_replications, config.seed);
        fit.mu_refined = true;
    }
    fit.log_likelihood = objective(fit.params.lambda_p, fit.params.mu);
    fit.psi = burstiness_scale(lambda, series.window_length(), series.size());
    return fit;
}

std::vector<bool> sfp_survivor_mask(const EventSeries& series, double lambda_hat,
                                    Rng& rng) {
    if (lambda_hat < 0.0)
        throw_error(ErrorKind::kInvalidArgument, "lambda_hat must be >= 0");
    const auto ts = series.timestamps();
    const std::size_t n = ts.size();
    std::vector<bool> survives(n, true);
    if (lambda_hat <= 0.0) return survives;

    const double radius = 2.0 / lambda_hat;
    const double lo = series.window_start();
    const double hi = series.last();

    double u = lo;
    while (true) {
        u += rng.exponential(1.0 / lambda_hat);
        if (u >= hi) break;

        // Nearest surviving event within `radius`, earlier event on ties.
        const auto right =
            std::lower_bound(ts.begin(), ts.end(), u) - ts.begin();
        std::ptrdiff_t li = static_cast<std::ptrdiff_t>(right) - 1;
        std::ptrdiff_t ri = static_cast<std::ptrdiff_t>(right);
        while (li >= 0 && !survives[static_cast<std::size_t>(li)]) --li;
        while (ri < static_cast<std::ptrdiff_t>(n) &&
               !survives[static_cast<std::size_t>(ri)])
            ++ri;
        const double dl = li >= 0 ? u - ts[static_cast<std::size_t>(li)] : radius;
        const double dr =
            ri < static_cast<std::ptrdiff_t>(n) ? ts[static_cast<std::size_t>(ri)] - u
                                                : radius;
        if (dl < radius && dl <= dr) {
            survives[static_cast<std::size_t>(li)] = false;
        } else if (dr < radius) {
            survives[static_cast<std::size_t>(ri)] = false;
        }
    }
    return survives;
}

double refine_mu(const EventSeries& series, double lambda_hat, int replications,
                 std::uint64_t seed) {
    if (replications < 1)
        throw_error(ErrorKind::kInvalidArgument, "replications must be >= 1");
    const auto ts = series.timestamps();
    std::vector<double> medians;
    medians.reserve(static_cast<std::size_t>(replications));

    for (int rep = 0; rep < replications; ++rep) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(rep)));
        const auto survives = sfp_survivor_mask(series, lambda_hat, rng);

        std::vector<double> gaps;
        double prev = -1.0;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (!survives[i]) continue;
            if (prev >= 0.0) gaps.push_back(ts[i] - prev);
            prev = ts[i];
        }
        if (gaps.size() < 2) continue; // fewer than 3 survivors
        medians.push_back(median(std::move(gaps)));
    }

    if (medians.empty())
        throw_error(ErrorKind::kRefinementFailed,
                    "every refinement replication left fewer than 3 survivors");
    return mean(medians);
}

double delta_metric(double est, double truth) {
    if (!(est > 0.0) || !(truth > 0.0))
        throw_error(ErrorKind::kInvalidArgument, "delta_metric requires positive inputs");
    const double ratio = est / truth;
    return ratio >= 1.0 ? ratio - 1.0 : 1.0 - truth / est;
}

} // namespace busca
