#pragma once

#include <cstdint>
#include <vector>

#include "busca/likelihood.hpp"
#include "busca/rng.hpp"
#include "busca/series.hpp"
#include "busca/types.hpp"

namespace busca {

struct EmConfig {
    int max_iterations = 100;
    double convergence_tol = 1e-4; // relative change in (lambda_p, mu)
    bool refine_mu = true;
    int refine_replications = 30;
    std::uint64_t seed = 0;
    int truncation_depth = kDefaultTruncationDepth;
};

/// EM fit of the mixture. Each M-step runs two coordinate-ascent sweeps
/// (golden-section line search per coordinate) of the expected
/// log-likelihood, with lambda_p searched on [0, n/(t_n - a)] and mu on
/// [(b-a)/(10n), t_n - a]. When `refine_mu` is set the reported mu is the
/// pseudo-event-deletion estimate and the log-likelihood is re-evaluated at
/// the refined parameters.
[[nodiscard]] MixtureFit fit_em(const EventSeries& series, const EmConfig& config = {});

/// Bias-corrected estimate of mu: repeatedly thin the series by deleting,
/// for each pseudo event of a rate-lambda_hat Poisson draw, the nearest
/// surviving event within 2/lambda_hat; the surviving events are treated as
/// a pure self-feeding realization and their median gap is recorded.
/// Returns the mean of the per-replication medians.
[[nodiscard]] double refine_mu(const EventSeries& series, double lambda_hat,
                               int replications, std::uint64_t seed);

/// One deletion pass of the refinement procedure: true marks a survivor
/// (treated as self-feeding), false an event deleted as Poisson.
[[nodiscard]] std::vector<bool> sfp_survivor_mask(const EventSeries& series,
                                                  double lambda_hat, Rng& rng);

/// Symmetric relative error: est/truth - 1 above parity, 1 - truth/est
/// below; antisymmetric in its arguments.
[[nodiscard]] double delta_metric(double est, double truth);

/// Burstiness scale implied by a Poisson rate on a window with n events:
/// (1 - lambda_p*(b-a)/n) * 100, clamped to [0, 100].
[[nodiscard]] double burstiness_scale(double lambda_p, double window_length,
                                      std::size_t n);

} // namespace busca
