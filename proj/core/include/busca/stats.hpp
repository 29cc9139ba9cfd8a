#pragma once

#include <functional>
#include <span>
#include <vector>

namespace busca {

[[nodiscard]] double mean(std::span<const double> xs);
[[nodiscard]] double sample_variance(std::span<const double> xs);

/// Median by partial sort of a copy; average of the middle pair for even n.
[[nodiscard]] double median(std::vector<double> xs);
[[nodiscard]] double median(std::span<const double> xs);

/// Median absolute deviation around the median (unscaled).
[[nodiscard]] double mad(std::span<const double> xs);

[[nodiscard]] double sample_correlation(std::span<const double> xs,
                                        std::span<const double> ys);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    double sse = 0.0;
};

/// Ordinary least squares of y on x. Requires >= 2 points and a
/// non-degenerate x; r2 is the squared correlation (0 when y is constant).
[[nodiscard]] LineFit fit_line(std::span<const double> xs, std::span<const double> ys);

/// Survival function of the chi-square distribution with one degree of
/// freedom.
[[nodiscard]] double chi2_survival_1df(double x);

/// (1 - alpha) quantile of the chi-square distribution with two degrees of
/// freedom.
[[nodiscard]] double chi2_quantile_2df(double alpha);

/// Golden-section search for the maximum of a unimodal function on [lo, hi].
/// Runs a fixed number of interval-shrinking iterations and returns the best
/// probed point.
struct GoldenResult {
    double x = 0.0;
    double value = 0.0;
};
[[nodiscard]] GoldenResult golden_section_max(const std::function<double(double)>& f,
                                              double lo, double hi, int iterations = 30);

} // namespace busca
