#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "busca/rng.hpp"
#include "busca/series.hpp"
#include "busca/types.hpp"

namespace busca {

/// Raw arrival times of a homogeneous Poisson process on (a, b]; may be
/// empty.
[[nodiscard]] std::vector<double> poisson_arrivals(double lambda_p, double a, double b,
                                                   Rng& rng);

/// Raw arrival times of the self-feeding gap chain on (a, b]: each gap is
/// exponential with mean mu/e + previous gap, the chain starting from
/// `first_gap`. May be empty. Stops early after `max_events` arrivals.
[[nodiscard]] std::vector<double> sfp_arrivals(
    double mu, double a, double b, double first_gap, Rng& rng,
    std::size_t max_events = std::numeric_limits<std::size_t>::max());

[[nodiscard]] EventSeries simulate_poisson(double lambda_p, double a, double b,
                                           std::uint64_t seed, std::string id = "");

/// `first_gap` defaults to mu, the median gap of the chain.
[[nodiscard]] EventSeries simulate_sfp(double mu, double a, double b,
                                       std::uint64_t seed,
                                       std::optional<double> first_gap = std::nullopt,
                                       std::string id = "");

struct MixtureRealization {
    EventSeries series;
    LabelAssignment truth;
};

/// Superposition of one Poisson and one self-feeding realization with the
/// ground-truth source labels (the labels a real observer never sees).
[[nodiscard]] MixtureRealization simulate_mixture(const MixtureParams& params,
                                                  double a, double b,
                                                  std::uint64_t seed,
                                                  std::string id = "");

/// Parameters whose mixture realizations average n_target events with a
/// psi_target percent self-feeding share on (a, b]. lambda_p has a closed
/// form; mu is calibrated by bisection on the median simulated count over
/// 50 seeds.
[[nodiscard]] MixtureParams pick_params_for_psi(double psi_target,
                                                std::size_t n_target,
                                                double a, double b,
                                                std::uint64_t seed = 0);

} // namespace busca
