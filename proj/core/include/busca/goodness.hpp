#pragma once

#include <optional>
#include <span>

namespace busca {

/// R^2 of the least-squares line through (t_i, i): how well the labeled
/// events grow at a constant rate. Requires >= 3 events.
[[nodiscard]] double r2_poisson(std::span<const double> times);

/// R^2 of the least-squares line through the empirical odds-ratio
/// F(g)/(1-F(g)) of the inter-event gaps versus the gap value, evaluated at
/// the gaps up to the 0.9 quantile (the odds ratio is infinite at the
/// largest gap and noise-dominated above that cap). Requires >= 4 events;
/// returns nullopt when the kept gaps are degenerate (zero-variance
/// regressor).
[[nodiscard]] std::optional<double> r2_sfp(std::span<const double> times);

} // namespace busca
