#include <doctest.h>

#include <cmath>

#include "busca/classify.hpp"
#include "busca/estimate.hpp"
#include "busca/simulate.hpp"
#include "busca/stats.hpp"

using namespace busca;

namespace {

EventSeries scale_series(const EventSeries& s, double factor) {
    std::vector<double> ts(s.timestamps().begin(), s.timestamps().end());
    for (double& t : ts) t *= factor;
    return validate_series(std::move(ts), s.window_start() * factor,
                           s.window_end() * factor, s.id());
}

} // namespace

TEST_SUITE("classify") {

TEST_CASE("floored statistics give an ambiguous verdict") {
    const auto s = validate_series({1.0, 2.0, 3.0, 5.0}, 0.0, 6.0);
    MixtureFit fit;
    fit.params = MixtureParams{0.5, 1.0};
    fit.log_likelihood = -1e9; // far below both null maxima
    const auto result = classify(s, fit);
    CHECK(result.phi_p == 1.0);
    CHECK(result.phi_s == 1.0);
    CHECK(result.verdict == Verdict::kAmbiguous);
}

TEST_CASE("pure Poisson data mostly accepts the Poisson null") {
    int accept = 0;
    const int seeds = 30;
    for (int seed = 0; seed < seeds; ++seed) {
        const auto s = simulate_poisson(1.0, 0.0, 500.0, derive_seed(100, seed));
        EmConfig config;
        config.seed = 1;
        const auto fit = fit_em(s, config);
        if (classify(s, fit).phi_p > 0.05) ++accept;
    }
    CHECK(accept > seeds / 2);
}

TEST_CASE("pure self-feeding data crushes the Poisson null") {
    int reject = 0;
    const int seeds = 20;
    for (int seed = 0; seed < seeds; ++seed) {
        Rng rng(derive_seed(200, seed));
        const auto arr = sfp_arrivals(1.0, 0.0, 1e9, 1.0, rng, 500);
        if (arr.size() < 500) continue;
        const auto s = validate_series(arr, 0.0, arr.back());
        EmConfig config;
        config.seed = 1;
        const auto fit = fit_em(s, config);
        if (classify(s, fit).phi_p <= 0.05) ++reject;
    }
    CHECK(reject == seeds);
}

TEST_CASE("mixed data is recognized as mixed") {
    const auto params = pick_params_for_psi(50.0, 1000, 0.0, 1000.0, 7);
    int mixed = 0;
    const int seeds = 20;
    for (int seed = 0; seed < seeds; ++seed) {
        const auto real =
            simulate_mixture(params, 0.0, 1000.0, derive_seed(300, seed));
        EmConfig config;
        config.seed = 2;
        const auto fit = fit_em(real.series, config);
        if (classify(real.series, fit).verdict == Verdict::kMixed) ++mixed;
    }
    CHECK(mixed >= seeds * 9 / 10);
}

TEST_CASE("verdict is invariant under time rescaling") {
    const auto params = pick_params_for_psi(50.0, 500, 0.0, 500.0, 3);
    const auto real = simulate_mixture(params, 0.0, 500.0, 17);
    const auto scaled = scale_series(real.series, 60.0);

    EmConfig config;
    config.seed = 5;
    const auto fit = fit_em(real.series, config);
    const auto fit_scaled = fit_em(scaled, config);

    const double rp = lrt_statistic(real.series, fit, NullModel::kPurePoisson);
    const double rp_scaled = lrt_statistic(scaled, fit_scaled, NullModel::kPurePoisson);
    const double rs = lrt_statistic(real.series, fit, NullModel::kPureSfp);
    const double rs_scaled = lrt_statistic(scaled, fit_scaled, NullModel::kPureSfp);
    CHECK(std::abs(rp - rp_scaled) < 1e-6);
    CHECK(std::abs(rs - rs_scaled) < 1e-6);
    CHECK(classify(real.series, fit).verdict == classify(scaled, fit_scaled).verdict);
}

TEST_CASE("p-values are monotone in the statistic") {
    double prev = 1.0;
    for (double r = 0.0; r < 30.0; r += 0.5) {
        const double phi = chi2_survival_1df(r);
        CHECK(phi <= prev);
        CHECK(phi >= 0.0);
        CHECK(phi <= 1.0);
        prev = phi;
    }
}

} // TEST_SUITE
