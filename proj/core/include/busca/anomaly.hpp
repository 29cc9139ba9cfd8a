#pragma once

#include <array>
#include <span>
#include <vector>

namespace busca {

/// Bivariate Gaussian summary built from medians, scaled median absolute
/// deviations and a median-based correlation, so that gross outliers barely
/// move it.
struct RobustGaussian {
    std::array<double, 2> center{0.0, 0.0};
    double var_x = 1.0;
    double var_y = 1.0;
    double cov_xy = 0.0;
    double correlation = 0.0;
};

[[nodiscard]] RobustGaussian fit_robust_gaussian(
    std::span<const std::array<double, 2>> points);

struct AnomalyScore {
    double d2 = 0.0;
    bool is_anomalous = false;
};

/// Squared Mahalanobis distance of each point from the robust center,
/// flagged against the (1-alpha) quantile of chi-square with 2 degrees of
/// freedom.
[[nodiscard]] std::vector<AnomalyScore> anomaly_scores(
    std::span<const std::array<double, 2>> points, const RobustGaussian& model,
    double alpha = 0.01);

} // namespace busca
