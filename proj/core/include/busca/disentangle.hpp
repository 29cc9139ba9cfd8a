#pragma once

#include <cstdint>

#include "busca/series.hpp"
#include "busca/types.hpp"

namespace busca {

/// Monte-Carlo split of a fitted series into Poisson-labeled and
/// self-feeding-labeled events. Each replication runs the pseudo-event
/// deletion pass at the fitted Poisson rate; the replication maximizing
/// min(r2_poisson, r2_sfp) of the induced split wins. An r2 that cannot be
/// computed (too few events on that side) scores 0.
[[nodiscard]] LabelAssignment disentangle(const EventSeries& series,
                                          const MixtureFit& fit,
                                          int replications = 20,
                                          std::uint64_t seed = 0);

} // namespace busca
