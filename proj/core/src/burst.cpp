#include "busca/burst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "busca/disentangle.hpp"
#include "busca/errors.hpp"

namespace busca {

namespace {

/// Prefix sums of centered (time, cumulative count) points supporting O(1)
/// least-squares SSE of any contiguous event range.
class SsePrefix {
public:
    explicit SsePrefix(std::span<const double> ts) {
        const std::size_t m = ts.size();
        x0_ = 0.5 * (ts.front() + ts.back());
        y0_ = 0.5 * static_cast<double>(m + 1);
        sx_.assign(m + 1, 0.0);
        sy_.assign(m + 1, 0.0);
        sxx_.assign(m + 1, 0.0);
        syy_.assign(m + 1, 0.0);
        sxy_.assign(m + 1, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            const double x = ts[i] - x0_;
            const double y = static_cast<double>(i + 1) - y0_;
            sx_[i + 1] = sx_[i] + x;
            sy_[i + 1] = sy_[i] + y;
            sxx_[i + 1] = sxx_[i] + x * x;
            syy_[i + 1] = syy_[i] + y * y;
            sxy_[i + 1] = sxy_[i] + x * y;
        }
    }

    // SSE of the OLS line over events [lo, hi] inclusive.
    [[nodiscard]] double sse(std::size_t lo, std::size_t hi) const {
        const double c = static_cast<double>(hi - lo + 1);
        if (c < 2.0) return 0.0;
        const double sx = sx_[hi + 1] - sx_[lo];
        const double sy = sy_[hi + 1] - sy_[lo];
        const double sxx = sxx_[hi + 1] - sxx_[lo] - sx * sx / c;
        const double syy = syy_[hi + 1] - syy_[lo] - sy * sy / c;
        const double sxy = sxy_[hi + 1] - sxy_[lo] - sx * sy / c;
        if (sxx <= 0.0) return 0.0;
        return std::max(0.0, syy - sxy * sxy / sxx);
    }

private:
    double x0_, y0_;
    std::vector<double> sx_, sy_, sxx_, syy_, sxy_;
};

} // namespace

std::vector<double> reduce_breakpoints(std::span<const double> sfp_events,
                                       int max_blocks) {
    const std::size_t m = sfp_events.size();
    if (m < 2)
        throw_error(ErrorKind::kInvalidArgument, "reduce_breakpoints needs >= 2 events");
    if (max_blocks < 2)
        throw_error(ErrorKind::kInvalidArgument, "max_blocks must be >= 2");
    const int half = max_blocks / 2;

    std::vector<double> picks;
    picks.reserve(static_cast<std::size_t>(max_blocks));

    // Count percentiles: the event leaving k/half of the events at or below.
    for (int k = 1; k <= half; ++k) {
        const std::size_t idx = static_cast<std::size_t>(
            std::ceil(static_cast<double>(k) * static_cast<double>(m) /
                      static_cast<double>(half)));
        picks.push_back(sfp_events[std::min(m, std::max<std::size_t>(idx, 1)) - 1]);
    }

    // Equal-length time grid: nearest event to each division point.
    const double t0 = sfp_events.front();
    const double span = sfp_events.back() - t0;
    for (int k = 1; k <= half; ++k) {
        const double point = t0 + span * static_cast<double>(k) / static_cast<double>(half);
        const auto it = std::lower_bound(sfp_events.begin(), sfp_events.end(), point);
        double chosen;
        if (it == sfp_events.begin()) {
            chosen = *it;
        } else if (it == sfp_events.end()) {
            chosen = sfp_events.back();
        } else {
            const double right = *it;
            const double left = *(it - 1);
            chosen = point - left <= right - point ? left : right;
        }
        picks.push_back(chosen);
    }

    std::sort(picks.begin(), picks.end());
    picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
    return picks;
}

double default_segment_penalty(std::span<const double> sfp_events) {
    if (sfp_events.size() < 2) return 0.0;
    SsePrefix prefix(sfp_events);
    const double sse = prefix.sse(0, sfp_events.size() - 1);
    return sse / static_cast<double>(sfp_events.size()) / 20.0;
}

Segmentation segment_events(std::span<const double> sfp_events,
                            std::span<const double> candidates, double penalty) {
    const std::size_t m = sfp_events.size();
    if (m < 2)
        throw_error(ErrorKind::kInvalidArgument, "segment_events needs >= 2 events");
    if (candidates.empty())
        throw_error(ErrorKind::kInvalidArgument, "segment_events needs candidates");
    if (!(penalty >= 0.0))
        throw_error(ErrorKind::kInvalidArgument, "penalty must be >= 0");

    // Map candidate timestamps to event indices; they must be events.
    std::vector<std::size_t> q;
    q.reserve(candidates.size() + 1);
    for (double c : candidates) {
        const auto it = std::lower_bound(sfp_events.begin(), sfp_events.end(), c);
        if (it == sfp_events.end() || *it != c)
            throw_error(ErrorKind::kInvalidArgument,
                        "candidate endpoint is not an event timestamp");
        q.push_back(static_cast<std::size_t>(it - sfp_events.begin()));
    }
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    if (q.back() != m - 1) q.push_back(m - 1); // final segment must reach the end

    const std::size_t c = q.size();
    SsePrefix prefix(sfp_events);

    std::vector<double> cost(c);
    std::vector<int> nsegs(c);
    std::vector<std::ptrdiff_t> parent(c, -1);
    for (std::size_t j = 0; j < c; ++j) {
        cost[j] = prefix.sse(0, q[j]) + penalty;
        nsegs[j] = 1;
        parent[j] = -1;
        for (std::size_t i = 0; i < j; ++i) {
            const double trial = cost[i] + prefix.sse(q[i] + 1, q[j]) + penalty;
            const int trial_segs = nsegs[i] + 1;
            if (trial < cost[j] || (trial == cost[j] && trial_segs < nsegs[j])) {
                cost[j] = trial;
                nsegs[j] = trial_segs;
                parent[j] = static_cast<std::ptrdiff_t>(i);
            }
        }
    }

    Segmentation out;
    out.cost = cost[c - 1];
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(c) - 1;
    while (j >= 0) {
        out.segment_ends.push_back(q[static_cast<std::size_t>(j)]);
        j = parent[static_cast<std::size_t>(j)];
    }
    std::reverse(out.segment_ends.begin(), out.segment_ends.end());
    return out;
}

std::vector<BurstSegment> detect_bursts(const EventSeries& series, const MixtureFit& fit,
                                        const BurstConfig& config) {
    const auto labels = disentangle(series, fit, config.replications, config.seed);
    const auto ts = series.timestamps();
    std::vector<double> sfp;
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (labels.labels[i] == EventLabel::kSfp) sfp.push_back(ts[i]);

    const double a = series.window_start();
    const double b = series.window_end();
    const double lambda = fit.params.lambda_p;
    const auto make_segment = [&](double lo, double hi, int count) {
        BurstSegment seg;
        seg.t_start = lo;
        seg.t_end = hi;
        seg.sfp_count = count;
        const double expected = lambda * (hi - lo);
        seg.tau = expected > 0.0 ? static_cast<double>(count) / expected
                                 : (count > 0 ? std::numeric_limits<double>::infinity()
                                              : 0.0);
        seg.is_burst = seg.tau >= config.tau_threshold;
        return seg;
    };

    if (sfp.size() < 2)
        return {make_segment(a, b, static_cast<int>(sfp.size()))};

    const auto candidates = reduce_breakpoints(sfp, config.max_blocks);
    const double penalty = config.penalty.value_or(default_segment_penalty(sfp));
    const auto segmentation = segment_events(sfp, candidates, penalty);

    std::vector<BurstSegment> segments;
    segments.reserve(segmentation.segment_ends.size());
    double t_lo = a;
    std::size_t idx_lo = 0;
    for (std::size_t s = 0; s < segmentation.segment_ends.size(); ++s) {
        const std::size_t end = segmentation.segment_ends[s];
        const bool last = s + 1 == segmentation.segment_ends.size();
        const double t_hi = last ? b : sfp[end];
        segments.push_back(make_segment(t_lo, t_hi, static_cast<int>(end + 1 - idx_lo)));
        t_lo = t_hi;
        idx_lo = end + 1;
    }
    return segments;
}

} // namespace busca
