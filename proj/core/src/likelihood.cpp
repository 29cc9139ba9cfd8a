#include "busca/likelihood.hpp"

#include <cmath>

namespace busca {

namespace {

constexpr double kEuler = 2.718281828459045;
constexpr double kIntensityFloor = 1e-300;

double guarded_log(double x) {
    if (x < kIntensityFloor)
        throw_error(ErrorKind::kNumericalUnderflow,
                    "intensity underflowed the 1e-300 floor before log()");
    return std::log(x);
}

} // namespace

double sfp_intensity(double mu, double last_gap) {
    if (!(mu > 0.0))
        throw_error(ErrorKind::kInvalidArgument, "sfp_intensity: mu must be > 0");
    if (!(last_gap >= 0.0))
        throw_error(ErrorKind::kInvalidArgument, "sfp_intensity: last_gap must be >= 0");
    return 1.0 / (mu / kEuler + last_gap);
}

PoissonMle poisson_loglik(const EventSeries& series) {
    const double n = static_cast<double>(series.size());
    const double len = series.window_length();
    PoissonMle mle;
    mle.lambda_hat = n / len;
    mle.log_likelihood = n * guarded_log(mle.lambda_hat) - n;
    return mle;
}

double sfp_loglik(const EventSeries& series, double mu) {
    if (!(mu > 0.0) || mu == kInfiniteMu)
        throw_error(ErrorKind::kInvalidArgument, "sfp_loglik: mu must be finite and > 0");
    const auto ts = series.timestamps();
    const std::size_t n = ts.size();
    const double a = series.window_start();
    const double b = series.window_end();
    const double f = mu / kEuler;

    // Per-event intensities; the chain state entering event i is the gap
    // that ended at event i-1 (the window start acts as the chain origin
    // with virtual gap mu).
    double loglik = 0.0;
    double compensator = 0.0;
    double prev_gap = mu; // virtual gap before the first event
    double prev_t = a;
    for (std::size_t i = 0; i < n; ++i) {
        const double rate = 1.0 / (f + prev_gap);
        loglik += guarded_log(rate);
        compensator += rate * (ts[i] - prev_t);
        prev_gap = ts[i] - prev_t;
        prev_t = ts[i];
    }
    compensator += (b - ts[n - 1]) / (f + prev_gap);
    return loglik - compensator;
}

EStepState compute_estep(const EventSeries& series,
                         const MixtureParams& params,
                         int truncation_depth) {
    params.validate();
    if (params.pure_poisson())
        throw_error(ErrorKind::kInvalidArgument, "compute_estep requires a finite mu");
    if (series.size() < 2)
        throw_error(ErrorKind::kInvalidArgument, "compute_estep requires n >= 2");
    if (truncation_depth < 1)
        throw_error(ErrorKind::kInvalidArgument, "truncation_depth must be >= 1");

    const auto ts = series.timestamps();
    const std::size_t n = ts.size();
    const double a0 = series.window_start();
    const double lambda_p = params.lambda_p;
    const double f = params.mu / kEuler;
    const double fallback = 1.0 / (f + params.mu);

    EStepState state;
    state.truncation_depth = truncation_depth;
    state.intensity_mean.resize(n);
    state.intensity_second_moment.resize(n);

    // p[i]: probability that event i came from the self-feeding component.
    // The first event is assumed self-feeding, which also makes the
    // backward weights a proper distribution.
    std::vector<double> p(n, 1.0);

    state.intensity_mean[0] = fallback;
    state.intensity_second_moment[0] = fallback * fallback;

    // Expected intensity at slot i (event i, or the window end for i == n)
    // given that the previous event i-1 is self-feeding: backward sum over
    // its most recent self-feeding predecessor, truncated to the most
    // recent terms.
    const auto sfp_branch = [&](std::size_t i, double& mean_out, double& second_out) {
        if (i == 1) {
            // Only the first event can precede; its ending gap is t0 - a.
            const double rate = 1.0 / (f + (ts[0] - a0));
            mean_out = rate;
            second_out = rate * rate;
            return;
        }
        mean_out = 0.0;
        second_out = 0.0;
        double prod = 1.0;
        const std::size_t lowest =
            i - 2 >= static_cast<std::size_t>(truncation_depth) - 1
                ? i - 1 - static_cast<std::size_t>(truncation_depth)
                : 0;
        for (std::size_t k = i - 2;; --k) {
            const double rate = 1.0 / (f + (ts[i - 1] - ts[k]));
            const double w = prod * p[k];
            mean_out += w * rate;
            second_out += w * rate * rate;
            prod *= 1.0 - p[k];
            if (k == lowest || k == 0) break;
        }
    };

    for (std::size_t i = 1; i < n; ++i) {
        double branch_mean, branch_second;
        sfp_branch(i, branch_mean, branch_second);
        const double p_prev = p[i - 1];
        state.intensity_mean[i] =
            (1.0 - p_prev) * state.intensity_mean[i - 1] + p_prev * branch_mean;
        state.intensity_second_moment[i] =
            (1.0 - p_prev) * state.intensity_second_moment[i - 1] +
            p_prev * branch_second;
        p[i] = state.intensity_mean[i] / (state.intensity_mean[i] + lambda_p);
    }

    double tail_mean, tail_second;
    sfp_branch(n, tail_mean, tail_second);
    state.tail_intensity =
        (1.0 - p[n - 1]) * state.intensity_mean[n - 1] + p[n - 1] * tail_mean;
    return state;
}

double expected_loglik(const EventSeries& series,
                       const MixtureParams& params,
                       const EStepState& state) {
    const auto ts = series.timestamps();
    const std::size_t n = ts.size();
    if (state.intensity_mean.size() != n || state.intensity_second_moment.size() != n)
        throw_error(ErrorKind::kInvalidArgument, "E-step state does not match the series");
    const double lambda_p = params.lambda_p;
    const double b = series.window_end();
    const double window = series.window_length();

    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double m1 = state.intensity_mean[i];
        const double m2 = state.intensity_second_moment[i];
        const double total = lambda_p + m1;
        const double variance = std::max(0.0, m2 - m1 * m1);
        sum += guarded_log(total) - variance / (2.0 * total * total);
    }

    // Area under the expected-intensity step function: the value at event i
    // was in force since the previous event, and the post-window tail uses
    // the expectation conditioned on the last event's label.
    double integral = state.intensity_mean[0] * (ts[0] - series.window_start());
    for (std::size_t i = 1; i < n; ++i)
        integral += state.intensity_mean[i] * (ts[i] - ts[i - 1]);
    integral += state.tail_intensity * (b - ts[n - 1]);

    return sum - integral - window * lambda_p;
}

} // namespace busca
