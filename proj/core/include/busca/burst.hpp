#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "busca/series.hpp"
#include "busca/types.hpp"

namespace busca {

/// A time segment of the window with its self-feeding event count and burst
/// power tau = sfp_count / (lambda_p * length).
struct BurstSegment {
    double t_start = 0.0;
    double t_end = 0.0;
    int sfp_count = 0;
    double tau = 0.0;
    bool is_burst = false;
};

/// Candidate segment endpoints: the union of count-percentile events and
/// the events nearest to an equal-length time grid, at most `max_blocks`
/// of them (half from each strategy). Candidates are always a subset of
/// the events.
[[nodiscard]] std::vector<double> reduce_breakpoints(std::span<const double> sfp_events,
                                                     int max_blocks = 200);

struct Segmentation {
    std::vector<std::size_t> segment_ends; // index of each segment's last event
    double cost = 0.0;                     // total SSE + penalty * segments
};

/// Optimal partition of the events into contiguous segments ending at
/// candidate events, minimizing the summed per-segment least-squares error
/// of cumulative count vs. time plus `penalty` per segment. Ties prefer
/// fewer segments.
[[nodiscard]] Segmentation segment_events(std::span<const double> sfp_events,
                                          std::span<const double> candidates,
                                          double penalty);

/// Default per-segment penalty: residual variance of the single-line fit
/// divided by 20.
[[nodiscard]] double default_segment_penalty(std::span<const double> sfp_events);

struct BurstConfig {
    std::optional<double> penalty; // default_segment_penalty when absent
    double tau_threshold = 1.0;
    int replications = 20; // disentangling replications
    std::uint64_t seed = 0;
    int max_blocks = 200;
};

/// Full pipeline: disentangle, reduce breakpoints, segment, and score each
/// segment. The returned segments are chronological and partition (a, b].
[[nodiscard]] std::vector<BurstSegment> detect_bursts(const EventSeries& series,
                                                      const MixtureFit& fit,
                                                      const BurstConfig& config = {});

} // namespace busca
