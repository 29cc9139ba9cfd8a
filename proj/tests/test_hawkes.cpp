#include <doctest.h>

#include <cmath>

#include "busca/estimate.hpp"
#include "busca/hawkes.hpp"
#include "busca/likelihood.hpp"
#include "busca/simulate.hpp"
#include "support/oracles.hpp"

using namespace busca;

TEST_SUITE("hawkes") {

TEST_CASE("alpha = 0 reduces exactly to the Poisson loglik") {
    const auto s = simulate_poisson(0.8, 0.0, 300.0, 4);
    const auto mle = poisson_loglik(s);
    const double hawkes =
        hawkes_loglik(s, HawkesParams{mle.lambda_hat, 0.0, 2.0});
    CHECK(std::abs(hawkes - mle.log_likelihood) < 1e-10);
}

TEST_CASE("recursion matches the naive double sum on a hand series") {
    const auto s = validate_series({1.0, 2.5, 7.0}, 0.0, 10.0);
    const HawkesParams params{0.3, 0.5, 1.2};
    CHECK(hawkes_loglik(s, params) ==
          doctest::Approx(oracles::naive_hawkes_loglik(s, params)).epsilon(1e-12));
}

TEST_CASE("recursion matches the naive double sum on simulated series") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto s = simulate_hawkes(HawkesParams{0.5, 0.5, 2.0}, 0.0, 120.0,
                                       derive_seed(600, seed));
        REQUIRE(s.size() >= 20);
        REQUIRE(s.size() <= 400);
        const HawkesParams params{0.4, 0.6, 1.5};
        const double fast = hawkes_loglik(s, params);
        const double slow = oracles::naive_hawkes_loglik(s, params);
        CHECK(std::abs(fast - slow) < 1e-9);
    }
}

TEST_CASE("large beta kills the kernel between events") {
    const auto s = simulate_poisson(1.0, 0.0, 200.0, 8);
    const auto mle = poisson_loglik(s);
    const double alpha = 0.5;
    const double n = static_cast<double>(s.size());
    // With the kernel arriving and dying instantly, the intensity at events
    // is the background and the kernel mass alpha per event is pure cost.
    const double limit = mle.log_likelihood - alpha * n;
    double prev_gap = 1e300;
    for (double beta : {1e2, 1e4, 1e6}) {
        const double ll = hawkes_loglik(s, HawkesParams{mle.lambda_hat, alpha, beta});
        const double gap = std::abs(ll - limit);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-3);
}

TEST_CASE("thinning simulation plus MLE recovers beta within a factor 2") {
    const HawkesParams truth{0.5, 0.5, 2.0};
    int ok = 0;
    const int seeds = 20;
    for (int seed = 0; seed < seeds; ++seed) {
        const auto s =
            simulate_hawkes(truth, 0.0, 1000.0, derive_seed(700, seed));
        const auto fit = fit_hawkes(s);
        const double ratio = fit.params.beta / truth.beta;
        if (ratio >= 0.5 && ratio <= 2.0) ++ok;
    }
    CHECK(ok >= seeds * 8 / 10);
}

TEST_CASE("pure Poisson data yields a tiny branching ratio and loses to the mixture") {
    int busca_wins = 0;
    std::vector<double> alphas;
    const int seeds = 10;
    for (int seed = 0; seed < seeds; ++seed) {
        const auto s = simulate_poisson(1.0, 0.0, 500.0, derive_seed(800, seed));
        const auto hawkes = fit_hawkes(s);
        alphas.push_back(hawkes.params.alpha);
        EmConfig config;
        config.seed = 1;
        const auto busca = fit_em(s, config);
        if (compare_aic(s, busca, hawkes).winner == AicWinner::kBusca) ++busca_wins;
    }
    std::sort(alphas.begin(), alphas.end());
    CHECK(alphas[seeds / 2] < 0.2);
    CHECK(busca_wins > seeds / 2);
}

TEST_CASE("AIC arithmetic and tie-breaking") {
    const auto s = validate_series({1.0, 2.0, 3.0, 4.0}, 0.0, 5.0);
    EmConfig config;
    config.refine_mu = false;
    const auto busca = fit_em(s, config);

    HawkesFit equal;
    equal.log_likelihood = busca.log_likelihood;
    equal.aic = 2.0 * 3.0 - 2.0 * equal.log_likelihood;
    CHECK(compare_aic(s, busca, equal).winner == AicWinner::kBusca);

    HawkesFit stronger;
    stronger.log_likelihood = busca.log_likelihood + 1.5;
    stronger.aic = 2.0 * 3.0 - 2.0 * stronger.log_likelihood;
    CHECK(compare_aic(s, busca, stronger).winner == AicWinner::kHawkes);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS((void)hawkes_loglik(validate_series({1.0}, 0.0, 2.0),
                                        HawkesParams{-1.0, 0.1, 1.0}),
                    Error);
    CHECK(HawkesParams{1.0, 0.5, 1.0}.stationary());
    CHECK_FALSE(HawkesParams{1.0, 1.5, 1.0}.stationary());
}

} // TEST_SUITE
