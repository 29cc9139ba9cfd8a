#include "busca/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "busca/goodness.hpp"
#include "busca/stats.hpp"

namespace busca {

namespace {

constexpr double kEuler = 2.718281828459045;

// Advances t by gap, never allowing the sum to stall on a timestamp that
// already exists (simple point pattern).
double advance(double t, double gap) {
    const double next = t + gap;
    return next > t ? next : std::nextafter(t, std::numeric_limits<double>::infinity());
}

} // namespace

std::vector<double> poisson_arrivals(double lambda_p, double a, double b, Rng& rng) {
    if (!(lambda_p > 0.0))
        throw_error(ErrorKind::kInvalidArgument, "poisson_arrivals: rate must be > 0");
    if (!(b > a))
        throw_error(ErrorKind::kInvalidArgument, "poisson_arrivals: window must satisfy b > a");
    std::vector<double> out;
    const double mean_gap = 1.0 / lambda_p;
    double t = a;
    while (true) {
        t = advance(t, rng.exponential(mean_gap));
        if (t > b) break;
        out.push_back(t);
    }
    return out;
}

std::vector<double> sfp_arrivals(double mu, double a, double b, double first_gap,
                                 Rng& rng, std::size_t max_events) {
    if (!(mu > 0.0) || mu == kInfiniteMu)
        throw_error(ErrorKind::kInvalidArgument, "sfp_arrivals: mu must be finite and > 0");
    if (!(b > a))
        throw_error(ErrorKind::kInvalidArgument, "sfp_arrivals: window must satisfy b > a");
    if (!(first_gap > 0.0))
        throw_error(ErrorKind::kInvalidArgument, "sfp_arrivals: first_gap must be > 0");
    std::vector<double> out;
    const double f = mu / kEuler;
    double state = first_gap;
    double t = a;
    while (out.size() < max_events) {
        const double gap = rng.exponential(f + state);
        const double next = advance(t, gap);
        if (next > b) break;
        out.push_back(next);
        state = next - t;
        t = next;
    }
    return out;
}

EventSeries simulate_poisson(double lambda_p, double a, double b, std::uint64_t seed,
                             std::string id) {
    Rng rng(seed);
    return validate_series(poisson_arrivals(lambda_p, a, b, rng), a, b, std::move(id));
}

EventSeries simulate_sfp(double mu, double a, double b, std::uint64_t seed,
                         std::optional<double> first_gap, std::string id) {
    Rng rng(seed);
    return validate_series(sfp_arrivals(mu, a, b, first_gap.value_or(mu), rng), a, b,
                           std::move(id));
}

MixtureRealization simulate_mixture(const MixtureParams& params, double a, double b,
                                    std::uint64_t seed, std::string id) {
    params.validate();
    Rng rng(seed);

    std::vector<double> pp;
    std::vector<double> sfp;
    if (!params.pure_sfp()) pp = poisson_arrivals(params.lambda_p, a, b, rng);
    if (!params.pure_poisson()) sfp = sfp_arrivals(params.mu, a, b, params.mu, rng);

    std::vector<std::pair<double, EventLabel>> merged;
    merged.reserve(pp.size() + sfp.size());
    for (double t : pp) merged.emplace_back(t, EventLabel::kPoisson);
    for (double t : sfp) merged.emplace_back(t, EventLabel::kSfp);
    std::sort(merged.begin(), merged.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 1; i < merged.size(); ++i) {
        if (merged[i].first <= merged[i - 1].first)
            merged[i].first = std::nextafter(merged[i - 1].first,
                                             std::numeric_limits<double>::infinity());
    }

    std::vector<double> times;
    LabelAssignment truth;
    times.reserve(merged.size());
    truth.labels.reserve(merged.size());
    std::vector<double> pp_times, sfp_times;
    for (const auto& [t, label] : merged) {
        times.push_back(t);
        truth.labels.push_back(label);
        (label == EventLabel::kPoisson ? pp_times : sfp_times).push_back(t);
    }

    if (pp_times.size() >= 3) truth.r2_poisson = r2_poisson(pp_times);
    if (sfp_times.size() >= 4) truth.r2_sfp = r2_sfp(sfp_times).value_or(0.0);

    return MixtureRealization{validate_series(std::move(times), a, b, std::move(id)),
                              std::move(truth)};
}

MixtureParams pick_params_for_psi(double psi_target, std::size_t n_target, double a,
                                  double b, std::uint64_t seed) {
    if (!(psi_target >= 0.0 && psi_target <= 100.0))
        throw_error(ErrorKind::kInvalidArgument, "psi_target must lie in [0, 100]");
    if (n_target < 10)
        throw_error(ErrorKind::kInvalidArgument, "n_target must be >= 10");
    if (!(b > a))
        throw_error(ErrorKind::kInvalidArgument, "window must satisfy b > a");

    const double n = static_cast<double>(n_target);
    const double lambda = (1.0 - psi_target / 100.0) * n / (b - a);
    if (psi_target == 0.0) return MixtureParams{lambda, kInfiniteMu};

    const double target = psi_target / 100.0 * n;
    constexpr int kSeedsPerProbe = 50;
    const auto median_count = [&](double mu) {
        std::vector<double> counts(kSeedsPerProbe);
        for (int s = 0; s < kSeedsPerProbe; ++s) {
            Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
            counts[s] = static_cast<double>(sfp_arrivals(mu, a, b, mu, rng).size());
        }
        return median(std::move(counts));
    };

    // Counts are pathwise nonincreasing in mu under common seeds, so a
    // plain bisection on log(mu) applies.
    double mu_lo = (b - a) / (10.0 * target);
    double mu_hi = 10.0 * (b - a);
    int guard = 0;
    while (median_count(mu_lo) < target) {
        mu_lo /= 2.0;
        if (++guard > 60)
            throw_error(ErrorKind::kCalibrationFailed,
                        "could not bracket mu from below for the requested psi");
    }
    guard = 0;
    while (median_count(mu_hi) > target) {
        mu_hi *= 2.0;
        if (++guard > 60)
            throw_error(ErrorKind::kCalibrationFailed,
                        "could not bracket mu from above for the requested psi");
    }
    for (int it = 0; it < 60; ++it) {
        const double mid = std::sqrt(mu_lo * mu_hi);
        (median_count(mid) >= target ? mu_lo : mu_hi) = mid;
    }
    return MixtureParams{lambda, std::sqrt(mu_lo * mu_hi)};
}

} // namespace busca
