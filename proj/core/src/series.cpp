#include "busca/series.hpp"

#include <algorithm>
#include <cmath>

namespace busca {

EventSeries validate_series(std::vector<double> raw,
                            std::optional<double> a,
                            std::optional<double> b,
                            std::string id) {
    if (raw.empty())
        throw_error(ErrorKind::kEmptySeries, "series '" + id + "' has no events");

    for (double t : raw) {
        if (!std::isfinite(t))
            throw_error(ErrorKind::kNonFiniteTimestamp,
                        "series '" + id + "' contains a non-finite timestamp");
    }

    std::sort(raw.begin(), raw.end());
    for (std::size_t i = 1; i < raw.size(); ++i) {
        if (raw[i] == raw[i - 1])
            throw_error(ErrorKind::kDuplicateTimestamp,
                        "series '" + id + "' has coincident timestamps at t=" +
                            std::to_string(raw[i]));
    }

    const double start = a.value_or(0.0);
    const double end = b.value_or(raw.back());
    if (!(std::isfinite(start) && std::isfinite(end)) || !(start < end))
        throw_error(ErrorKind::kInvalidArgument,
                    "series '" + id + "' has an invalid window");
    if (raw.front() < start || raw.back() > end)
        throw_error(ErrorKind::kTimestampOutsideWindow,
                    "series '" + id + "' has events outside [a, b]");

    return EventSeries(std::move(id), std::move(raw), start, end);
}

std::size_t counting_function(const EventSeries& series, double t) {
    if (t < series.window_start() || t > series.window_end())
        throw_error(ErrorKind::kInvalidArgument, "t outside the observation window");
    auto ts = series.timestamps();
    return static_cast<std::size_t>(
        std::upper_bound(ts.begin(), ts.end(), t) - ts.begin());
}

} // namespace busca
