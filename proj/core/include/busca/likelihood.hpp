#pragma once

#include <vector>

#include "busca/series.hpp"
#include "busca/types.hpp"

namespace busca {

/// Conditional intensity of the self-feeding component given the gap
/// between the two most recent of its events: 1 / (mu/e + last_gap).
[[nodiscard]] double sfp_intensity(double mu, double last_gap);

struct PoissonMle {
    double lambda_hat = 0.0;
    double log_likelihood = 0.0;
};

/// Closed-form maximum likelihood fit of a homogeneous Poisson process:
/// lambda_hat = n/(b-a), loglik = n*log(lambda_hat) - lambda_hat*(b-a).
[[nodiscard]] PoissonMle poisson_loglik(const EventSeries& series);

/// Exact log-likelihood of the series as a pure self-feeding process. The
/// gap chain starts at the window edge with state mu, so the intensity at
/// the first event is 1/(mu/e + mu) and the first observed gap is t1 - a.
[[nodiscard]] double sfp_loglik(const EventSeries& series, double mu);

/// Expected self-feeding intensity (and its second moment) at each event,
/// marginalized over the hidden source labels by the backward dynamic
/// program. The backward sum keeps at most `truncation_depth` terms; older
/// terms carry a vanishing product of Poisson-label probabilities.
/// `tail_intensity` is the expected intensity in force after the last
/// event, used for the (t_n, b] part of the compensator.
struct EStepState {
    std::vector<double> intensity_mean;          // E[lambda_s(t_i | H)]
    std::vector<double> intensity_second_moment; // E[lambda_s(t_i | H)^2]
    double tail_intensity = 0.0;
    int truncation_depth = 10;
};

constexpr int kDefaultTruncationDepth = 10;

[[nodiscard]] EStepState compute_estep(const EventSeries& series,
                                       const MixtureParams& params,
                                       int truncation_depth = kDefaultTruncationDepth);

/// Second-order expansion of the expected mixture log-likelihood at
/// `params` given the E-step state computed at those parameters. The
/// integral of the expected intensity holds intensity_mean[i] on
/// (t_{i-1}, t_i] and tail_intensity on (t_n, b], mirroring the exact
/// pure-model compensator.
[[nodiscard]] double expected_loglik(const EventSeries& series,
                                     const MixtureParams& params,
                                     const EStepState& state);

} // namespace busca
