#include <doctest.h>

#include <cmath>

#include "busca/goodness.hpp"
#include "busca/rng.hpp"
#include "busca/simulate.hpp"
#include "busca/stats.hpp"

using namespace busca;

TEST_SUITE("goodness") {

TEST_CASE("perfectly regular events give r2 = 1") {
    std::vector<double> ts;
    for (int i = 1; i <= 50; ++i) ts.push_back(static_cast<double>(i));
    CHECK(r2_poisson(ts) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)r2_poisson(std::vector<double>{1.0, 2.0}), Error);
}

TEST_CASE("simulated Poisson series score near 1") {
    int high = 0;
    const int seeds = 100;
    for (int seed = 0; seed < seeds; ++seed) {
        const auto s = simulate_poisson(1.0, 0.0, 500.0, derive_seed(1000, seed));
        if (r2_poisson(s.timestamps()) > 0.99) ++high;
    }
    CHECK(high >= 95);
}

TEST_CASE("a lone burst plus silence scores poorly") {
    std::vector<double> ts;
    for (int i = 1; i <= 200; ++i) ts.push_back(static_cast<double>(i) / 201.0);
    for (double t : {20.0, 40.0, 60.0, 80.0, 100.0}) ts.push_back(t);
    CHECK(r2_poisson(ts) < 0.8);
}

TEST_CASE("self-feeding gaps give a near-linear odds ratio") {
    int high = 0, usable = 0;
    for (int seed = 0; seed < 50; ++seed) {
        Rng rng(derive_seed(2000, seed));
        const auto arr = sfp_arrivals(1.0, 0.0, 1e9, 1.0, rng, 500);
        if (arr.size() < 500) continue;
        ++usable;
        const auto r2 = r2_sfp(arr);
        REQUIRE(r2.has_value());
        if (*r2 > 0.9) ++high;
    }
    REQUIRE(usable == 50);
    CHECK(high >= 40); // >= 80% of seeds
}

TEST_CASE("equal gaps are a degenerate regressor") {
    CHECK_FALSE(r2_sfp(std::vector<double>{0.0, 1.0, 2.0, 3.0, 4.0}).has_value());
    CHECK_THROWS_AS((void)r2_sfp(std::vector<double>{1.0, 2.0, 3.0}), Error);
}

TEST_CASE("exponential gaps fit the odds-ratio line worse than the chain") {
    std::vector<double> pp_scores, sfp_scores;
    for (int seed = 0; seed < 30; ++seed) {
        const auto pp = simulate_poisson(1.0, 0.0, 500.0, derive_seed(3000, seed));
        if (auto r2 = r2_sfp(pp.timestamps())) pp_scores.push_back(*r2);
        Rng rng(derive_seed(4000, seed));
        const auto arr = sfp_arrivals(1.0, 0.0, 1e9, 1.0, rng, 500);
        if (auto r2 = r2_sfp(arr)) sfp_scores.push_back(*r2);
    }
    CHECK(median(pp_scores) < median(sfp_scores));
}

TEST_CASE("both statistics are invariant to time rescaling") {
    const auto real = simulate_mixture(MixtureParams{0.5, 2.0}, 0.0, 200.0, 9);
    std::vector<double> ts(real.series.timestamps().begin(),
                           real.series.timestamps().end());
    std::vector<double> scaled(ts);
    for (double& t : scaled) t *= 60.0;
    CHECK(r2_poisson(ts) == doctest::Approx(r2_poisson(scaled)).epsilon(1e-9));
    const auto a = r2_sfp(ts);
    const auto b = r2_sfp(scaled);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == doctest::Approx(*b).epsilon(1e-9));

    std::vector<double> shifted(ts);
    for (double& t : shifted) t += 1000.0;
    CHECK(r2_poisson(ts) == doctest::Approx(r2_poisson(shifted)).epsilon(1e-9));
}

} // TEST_SUITE
