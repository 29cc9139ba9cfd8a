#pragma once

#include <cstdint>
#include <string>

#include "busca/series.hpp"
#include "busca/types.hpp"

namespace busca {

/// Exponential-kernel self-exciting process: background rate lambda_p plus
/// kernel alpha*beta*exp(-beta*x) per past event. alpha is the expected
/// offspring count per event; alpha >= 1 is non-stationary but allowed.
struct HawkesParams {
    double lambda_p = 0.0;
    double alpha = 0.0;
    double beta = 1.0;

    void validate() const {
        if (!(lambda_p >= 0.0) || !(alpha >= 0.0) || !(beta >= 0.0))
            throw_error(ErrorKind::kInvalidArgument, "Hawkes parameters must be >= 0");
    }
    [[nodiscard]] bool stationary() const noexcept { return alpha < 1.0; }
};

/// Exact log-likelihood via the O(n) exponential-decay recursion with a
/// closed-form compensator.
[[nodiscard]] double hawkes_loglik(const EventSeries& series, const HawkesParams& params);

struct HawkesFit {
    HawkesParams params;
    double log_likelihood = 0.0;
    double aic = 0.0;
};

/// Maximum likelihood by multi-start coordinate ascent over
/// (lambda_p, alpha, beta); AIC = 2*3 - 2*loglik.
[[nodiscard]] HawkesFit fit_hawkes(const EventSeries& series);

enum class AicWinner { kBusca, kHawkes };

struct AicComparison {
    double aic_busca = 0.0;
    double aic_hawkes = 0.0;
    AicWinner winner = AicWinner::kBusca;
};

/// AIC of the two-parameter mixture (log-likelihood re-evaluated at the
/// fitted parameters) against the three-parameter Hawkes fit; ties go to
/// the smaller model.
[[nodiscard]] AicComparison compare_aic(const EventSeries& series,
                                        const MixtureFit& busca_fit,
                                        const HawkesFit& hawkes_fit);

/// Ogata thinning sampler.
[[nodiscard]] EventSeries simulate_hawkes(const HawkesParams& params, double a, double b,
                                          std::uint64_t seed, std::string id = "");

} // namespace busca
