#include "busca/anomaly.hpp"

#include <cmath>

#include "busca/errors.hpp"
#include "busca/stats.hpp"

namespace busca {

namespace {
constexpr double kMadToSigma = 1.4826; // Gaussian consistency factor
}

RobustGaussian fit_robust_gaussian(std::span<const std::array<double, 2>> points) {
    if (points.size() < 10)
        throw_error(ErrorKind::kInvalidArgument,
                    "fit_robust_gaussian needs at least 10 points");

    std::vector<double> xs(points.size()), ys(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        xs[i] = points[i][0];
        ys[i] = points[i][1];
    }

    RobustGaussian model;
    model.center = {median(xs), median(ys)};
    const double sx = kMadToSigma * mad(xs);
    const double sy = kMadToSigma * mad(ys);
    if (sx == 0.0 || sy == 0.0)
        throw_error(ErrorKind::kDegenerateScale,
                    "zero median absolute deviation in a coordinate");

    // Correlation from the medians of |u+v| and |u-v| over the robustly
    // standardized coordinates.
    std::vector<double> plus(points.size()), minus(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double u = (xs[i] - model.center[0]) / sx;
        const double v = (ys[i] - model.center[1]) / sy;
        plus[i] = std::abs(u + v);
        minus[i] = std::abs(u - v);
    }
    const double mp = median(std::move(plus));
    const double mm = median(std::move(minus));
    if (mp == 0.0 && mm == 0.0)
        throw_error(ErrorKind::kDegenerateScale, "degenerate correlation medians");
    const double r = (mp * mp - mm * mm) / (mp * mp + mm * mm);
    if (!(std::abs(r) < 1.0))
        throw_error(ErrorKind::kDegenerateScale,
                    "robust correlation is singular (|r| >= 1)");

    model.var_x = sx * sx;
    model.var_y = sy * sy;
    model.correlation = r;
    model.cov_xy = r * sx * sy;
    return model;
}

std::vector<AnomalyScore> anomaly_scores(std::span<const std::array<double, 2>> points,
                                         const RobustGaussian& model, double alpha) {
    const double det = model.var_x * model.var_y - model.cov_xy * model.cov_xy;
    if (!(det > 0.0))
        throw_error(ErrorKind::kDegenerateScale, "singular covariance matrix");
    const double threshold = chi2_quantile_2df(alpha);

    std::vector<AnomalyScore> scores(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double dx = points[i][0] - model.center[0];
        const double dy = points[i][1] - model.center[1];
        const double d2 =
            (dx * dx * model.var_y - 2.0 * dx * dy * model.cov_xy + dy * dy * model.var_x) /
            det;
        scores[i] = AnomalyScore{d2, d2 > threshold};
    }
    return scores;
}

} // namespace busca
