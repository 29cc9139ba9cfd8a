#include <doctest.h>

#include <cmath>

#include "busca/estimate.hpp"
#include "busca/simulate.hpp"
#include "busca/stats.hpp"

using namespace busca;

TEST_SUITE("estimate") {

TEST_CASE("delta metric") {
    CHECK(delta_metric(1.5, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(delta_metric(1.0, 1.5) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(delta_metric(2.0, 2.0) == 0.0);
    CHECK_THROWS_AS((void)delta_metric(0.0, 1.0), Error);
    CHECK_THROWS_AS((void)delta_metric(1.0, -2.0), Error);

    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
        const double x = rng.uniform(0.01, 10.0);
        const double y = rng.uniform(0.01, 10.0);
        CHECK(delta_metric(x, y) == -delta_metric(y, x));
    }
}

TEST_CASE("burstiness scale formula and clamping") {
    CHECK(burstiness_scale(0.5, 1000.0, 1000) == doctest::Approx(50.0));
    CHECK(burstiness_scale(0.0, 1000.0, 1000) == 100.0);
    CHECK(burstiness_scale(2.0, 1000.0, 1000) == 0.0); // clamped
}

TEST_CASE("pure Poisson input drives the fit to its boundary") {
    const auto s = simulate_poisson(1.0, 0.0, 500.0, 42);
    EmConfig config;
    config.refine_mu = false;
    const auto fit = fit_em(s, config);
    const double mle = static_cast<double>(s.size()) / s.window_length();
    CHECK(std::abs(fit.params.lambda_p - mle) / mle < 0.10);
    const double span = s.last() - s.window_start();
    CHECK(fit.params.mu > 0.5 * span); // pushed toward the upper bound
    CHECK(fit.psi < 15.0);
}

TEST_CASE("fitted parameters respect the search bounds") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto params = pick_params_for_psi(50.0, 300, 0.0, 300.0, 2);
        const auto real = simulate_mixture(params, 0.0, 300.0, derive_seed(40, seed));
        EmConfig config;
        config.refine_mu = false;
        const auto fit = fit_em(real.series, config);
        const double n = static_cast<double>(real.series.size());
        const double span = real.series.last() - real.series.window_start();
        CHECK(fit.params.lambda_p >= 0.0);
        CHECK(fit.params.lambda_p <= n / span * (1.0 + 1e-9));
        CHECK(fit.params.mu > 0.0);
        CHECK(fit.params.mu <= span * (1.0 + 1e-9));
        CHECK(fit.em_iterations <= config.max_iterations);
    }
}

TEST_CASE("lambda recovery on mixed data") {
    const auto params = pick_params_for_psi(50.0, 1000, 0.0, 1000.0, 7);
    std::vector<double> abs_delta;
    for (int seed = 0; seed < 20; ++seed) {
        const auto real =
            simulate_mixture(params, 0.0, 1000.0, derive_seed(7000, seed));
        EmConfig config;
        config.refine_mu = false;
        const auto fit = fit_em(real.series, config);
        abs_delta.push_back(std::abs(delta_metric(fit.params.lambda_p, params.lambda_p)));
    }
    CHECK(median(abs_delta) < 0.3);
}

TEST_CASE("M-step is nondecreasing at a fixed E-step state") {
    const auto params = pick_params_for_psi(50.0, 200, 0.0, 200.0, 12);
    const auto real = simulate_mixture(params, 0.0, 200.0, 5);
    const auto state = compute_estep(real.series, params);
    const double n = static_cast<double>(real.series.size());
    const double lambda_hi = n / (real.series.last() - real.series.window_start());

    const auto value_at = [&](double lambda) {
        return expected_loglik(real.series, MixtureParams{lambda, params.mu}, state);
    };
    const double before = value_at(params.lambda_p);
    const double step1 = golden_section_max(value_at, 0.0, lambda_hi).value;
    const double step2 = golden_section_max(value_at, 0.0, lambda_hi).value;
    CHECK(step1 >= before - 1e-8);
    CHECK(step2 >= step1 - 1e-8);
}

TEST_CASE("refinement with a zero rate returns the median gap") {
    const auto s = validate_series({1.0, 2.0, 4.0, 7.0, 11.0}, 0.0, 12.0);
    const double refined = refine_mu(s, 0.0, 5, 99);
    CHECK(refined == doctest::Approx(2.5)); // gaps 1,2,3,4
}

TEST_CASE("refinement is deterministic and concentrates with replications") {
    const auto params = pick_params_for_psi(50.0, 500, 0.0, 500.0, 3);
    const auto real = simulate_mixture(params, 0.0, 500.0, 31);

    const double r1 = refine_mu(real.series, params.lambda_p, 30, 5);
    const double r2 = refine_mu(real.series, params.lambda_p, 30, 5);
    CHECK(r1 == r2);

    std::vector<double> few, many;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        few.push_back(refine_mu(real.series, params.lambda_p, 10, derive_seed(1, seed)));
        many.push_back(refine_mu(real.series, params.lambda_p, 30, derive_seed(2, seed)));
    }
    const double ratio = sample_variance(few) / sample_variance(many);
    // Variance should shrink about like 1/replications (3x here), within 3x.
    CHECK(ratio > 1.0);
    CHECK(ratio < 9.0);
}

TEST_CASE("refined mu beats the EM mu on mixed data") {
    const auto params = pick_params_for_psi(50.0, 1000, 0.0, 1000.0, 7);
    std::vector<double> em_err, refined_err;
    for (int seed = 0; seed < 20; ++seed) {
        const auto real =
            simulate_mixture(params, 0.0, 1000.0, derive_seed(9000, seed));
        EmConfig config;
        config.refine_mu = false;
        const auto fit = fit_em(real.series, config);
        const double refined =
            refine_mu(real.series, fit.params.lambda_p, 30, derive_seed(9500, seed));
        em_err.push_back(std::abs(delta_metric(fit.params.mu, params.mu)));
        refined_err.push_back(std::abs(delta_metric(refined, params.mu)));
    }
    CHECK(median(refined_err) < median(em_err));
}

TEST_CASE("refined mu underestimates when Poisson dominates") {
    const auto params = pick_params_for_psi(10.0, 1000, 0.0, 1000.0, 7);
    std::vector<double> deltas;
    for (int seed = 0; seed < 20; ++seed) {
        const auto real =
            simulate_mixture(params, 0.0, 1000.0, derive_seed(10000, seed));
        EmConfig config;
        config.refine_mu = false;
        const auto fit = fit_em(real.series, config);
        const double refined =
            refine_mu(real.series, fit.params.lambda_p, 30, derive_seed(10500, seed));
        deltas.push_back(delta_metric(refined, params.mu));
    }
    CHECK(median(deltas) < 0.0);
}

TEST_CASE("refinement fails when every replication degenerates") {
    const auto s = validate_series({1.0, 2.0, 3.0}, 0.0, 4.0);
    // Rate so high that pseudo events delete everything every time.
    CHECK_THROWS_AS((void)refine_mu(s, 1000.0, 5, 1), Error);
}

TEST_CASE("fit_em populates the fit record") {
    const auto params = pick_params_for_psi(50.0, 300, 0.0, 300.0, 2);
    const auto real = simulate_mixture(params, 0.0, 300.0, 8);
    EmConfig config;
    config.seed = 4;
    const auto fit = fit_em(real.series, config);
    CHECK(fit.mu_refined);
    CHECK(fit.em_iterations >= 1);
    CHECK(std::isfinite(fit.log_likelihood));
    CHECK(fit.psi >= 0.0);
    CHECK(fit.psi <= 100.0);
}

} // TEST_SUITE
