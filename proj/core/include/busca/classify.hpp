#pragma once

#include "busca/series.hpp"
#include "busca/types.hpp"

namespace busca {

enum class NullModel { kPurePoisson, kPureSfp };

/// Likelihood-ratio statistic R = 2*(loglik of the fitted mixture - best
/// pure-model loglik), floored at zero. The pure-Poisson null has a closed
/// form; the pure self-feeding null maximizes over mu by golden section.
[[nodiscard]] double lrt_statistic(const EventSeries& series, const MixtureFit& fit,
                                   NullModel null);

/// Tests both pure-model nulls against a chi-square(1) reference and
/// combines the p-values into a verdict at significance `alpha`. Both
/// accepted is surfaced as kAmbiguous rather than tie-broken.
[[nodiscard]] ClassificationResult classify(const EventSeries& series,
                                            const MixtureFit& fit,
                                            double alpha = 0.05);

} // namespace busca
