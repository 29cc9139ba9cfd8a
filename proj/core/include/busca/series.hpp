#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "busca/errors.hpp"

namespace busca {

/// A strictly increasing sequence of event timestamps observed on the
/// window (a, b]. Immutable after construction; build one via
/// `validate_series`.
class EventSeries {
public:
    [[nodiscard]] const std::string& id() const noexcept { return id_; }
    [[nodiscard]] std::span<const double> timestamps() const noexcept { return timestamps_; }
    [[nodiscard]] std::size_t size() const noexcept { return timestamps_.size(); }
    [[nodiscard]] double window_start() const noexcept { return a_; }
    [[nodiscard]] double window_end() const noexcept { return b_; }
    [[nodiscard]] double window_length() const noexcept { return b_ - a_; }
    [[nodiscard]] double first() const noexcept { return timestamps_.front(); }
    [[nodiscard]] double last() const noexcept { return timestamps_.back(); }

private:
    EventSeries(std::string id, std::vector<double> timestamps, double a, double b)
        : id_(std::move(id)), timestamps_(std::move(timestamps)), a_(a), b_(b) {}

    friend EventSeries validate_series(std::vector<double> raw,
                                       std::optional<double> a,
                                       std::optional<double> b,
                                       std::string id);

    std::string id_;
    std::vector<double> timestamps_;
    double a_;
    double b_;
};

/// Sorts `raw`, checks it is a simple point pattern (no coincident events,
/// all finite) and that it fits the window. Missing window bounds default
/// to a = 0 and b = last event. Coincident timestamps are an error, never
/// merged; callers that need jitter must apply it themselves.
[[nodiscard]] EventSeries validate_series(std::vector<double> raw,
                                          std::optional<double> a = std::nullopt,
                                          std::optional<double> b = std::nullopt,
                                          std::string id = "");

/// N(t): number of events with timestamp <= t. Right-continuous step
/// function; requires t inside [a, b].
[[nodiscard]] std::size_t counting_function(const EventSeries& series, double t);

} // namespace busca
