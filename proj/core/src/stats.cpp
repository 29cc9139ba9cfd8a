#include "busca/stats.hpp"

#include <algorithm>
#include <cmath>

#include "busca/errors.hpp"

namespace busca {

double mean(std::span<const double> xs) {
    if (xs.empty())
        throw_error(ErrorKind::kInvalidArgument, "mean of empty range");
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2)
        throw_error(ErrorKind::kInvalidArgument, "variance needs >= 2 values");
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

double median(std::vector<double> xs) {
    if (xs.empty())
        throw_error(ErrorKind::kInvalidArgument, "median of empty range");
    const std::size_t n = xs.size();
    const std::size_t mid = n / 2;
    std::nth_element(xs.begin(), xs.begin() + mid, xs.end());
    double hi = xs[mid];
    if (n % 2 == 1) return hi;
    double lo = *std::max_element(xs.begin(), xs.begin() + mid);
    return 0.5 * (lo + hi);
}

double median(std::span<const double> xs) {
    return median(std::vector<double>(xs.begin(), xs.end()));
}

double mad(std::span<const double> xs) {
    const double m = median(xs);
    std::vector<double> dev(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) dev[i] = std::abs(xs[i] - m);
    return median(std::move(dev));
}

double sample_correlation(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw_error(ErrorKind::kInvalidArgument, "correlation needs matched ranges, n >= 2");
    const double mx = mean(xs);
    const double my = mean(ys);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw_error(ErrorKind::kDegenerateScale, "correlation of a constant range");
    return sxy / std::sqrt(sxx * syy);
}

LineFit fit_line(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw_error(ErrorKind::kInvalidArgument, "fit_line needs matched ranges, n >= 2");
    const double mx = mean(xs);
    const double my = mean(ys);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0)
        throw_error(ErrorKind::kDegenerateScale, "fit_line with constant x");
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.sse = std::max(0.0, syy - fit.slope * sxy);
    fit.r2 = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 0.0;
    return fit;
}

double chi2_survival_1df(double x) {
    if (x <= 0.0) return 1.0;
    return std::erfc(std::sqrt(0.5 * x));
}

double chi2_quantile_2df(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw_error(ErrorKind::kInvalidArgument, "alpha must be in (0, 1)");
    return -2.0 * std::log(alpha);
}

GoldenResult golden_section_max(const std::function<double(double)>& f,
                                double lo, double hi, int iterations) {
    if (!(lo <= hi))
        throw_error(ErrorKind::kInvalidArgument, "golden_section_max: empty interval");
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    GoldenResult best = f1 >= f2 ? GoldenResult{x1, f1} : GoldenResult{x2, f2};
    for (int it = 0; it < iterations; ++it) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
        const GoldenResult cur = f1 >= f2 ? GoldenResult{x1, f1} : GoldenResult{x2, f2};
        if (cur.value > best.value) best = cur;
    }
    return best;
}

} // namespace busca
