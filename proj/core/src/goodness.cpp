#include "busca/goodness.hpp"

#include <algorithm>
#include <vector>

#include "busca/errors.hpp"
#include "busca/stats.hpp"

namespace busca {

double r2_poisson(std::span<const double> times) {
    if (times.size() < 3)
        throw_error(ErrorKind::kInvalidArgument, "r2_poisson needs >= 3 events");
    std::vector<double> counts(times.size());
    for (std::size_t i = 0; i < times.size(); ++i)
        counts[i] = static_cast<double>(i + 1);
    return fit_line(times, counts).r2;
}

std::optional<double> r2_sfp(std::span<const double> times) {
    if (times.size() < 4)
        throw_error(ErrorKind::kInvalidArgument, "r2_sfp needs >= 4 events (3 gaps)");
    std::vector<double> gaps(times.size() - 1);
    for (std::size_t i = 1; i < times.size(); ++i) gaps[i - 1] = times[i] - times[i - 1];
    std::sort(gaps.begin(), gaps.end());

    // The empirical odds ratio explodes near F = 1 and its top order
    // statistics dominate the regression; evaluate only up to the 0.9
    // quantile of the gaps.
    const std::size_t m = gaps.size();
    std::vector<double> xs, ys;
    xs.reserve(m - 1);
    ys.reserve(m - 1);
    for (std::size_t i = 1; i < m; ++i) {
        const double fraction = static_cast<double>(i) / static_cast<double>(m);
        if (fraction > 0.9) break;
        xs.push_back(gaps[i - 1]);
        ys.push_back(fraction / (1.0 - fraction));
    }
    if (xs.size() < 2 || xs.front() == xs.back()) return std::nullopt;
    return fit_line(xs, ys).r2;
}

} // namespace busca
