#include "busca/hawkes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "busca/likelihood.hpp"
#include "busca/rng.hpp"
#include "busca/stats.hpp"

namespace busca {

double hawkes_loglik(const EventSeries& series, const HawkesParams& params) {
    params.validate();
    const auto ts = series.timestamps();
    const std::size_t n = ts.size();
    const double b = series.window_end();
    const double excitation = params.alpha * params.beta;

    double loglik = 0.0;
    double decayed = 0.0; // sum of exp(-beta*(t_i - t_j)) over j < i
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0)
            decayed = std::exp(-params.beta * (ts[i] - ts[i - 1])) * (1.0 + decayed);
        const double intensity = params.lambda_p + excitation * decayed;
        if (intensity < 1e-300)
            throw_error(ErrorKind::kNumericalUnderflow, "Hawkes intensity underflow");
        loglik += std::log(intensity);
    }

    double kernel_mass = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        kernel_mass += 1.0 - std::exp(-params.beta * (b - ts[i]));
    return loglik - params.lambda_p * series.window_length() - params.alpha * kernel_mass;
}

HawkesFit fit_hawkes(const EventSeries& series) {
    if (series.size() < 3)
        throw_error(ErrorKind::kInvalidArgument, "fit_hawkes requires n >= 3");
    const double n = static_cast<double>(series.size());
    const double rate = n / series.window_length();
    const double mean_gap =
        (series.last() - series.first()) / (n - 1.0);

    const double lambda_lo = 1e-8 * rate;
    const double lambda_hi = 1.2 * rate;
    const double alpha_lo = 0.0;
    const double alpha_hi = 0.999;
    const double log_beta_lo = std::log(1e-3 / mean_gap);
    const double log_beta_hi = std::log(1e3 / mean_gap);

    const auto objective = [&](double lambda, double alpha, double beta) {
        return hawkes_loglik(series, HawkesParams{lambda, alpha, beta});
    };

    HawkesFit best;
    best.log_likelihood = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (double alpha0 : {0.1, 0.5, 0.9}) {
        for (double beta0 : {1.0 / mean_gap, 10.0 / mean_gap}) {
            double lambda = std::clamp((1.0 - alpha0) * rate, lambda_lo, lambda_hi);
            double alpha = alpha0;
            double beta = beta0;
            for (int sweep = 0; sweep < 3; ++sweep) {
                lambda = golden_section_max(
                             [&](double x) { return objective(x, alpha, beta); },
                             lambda_lo, lambda_hi)
                             .x;
                alpha = golden_section_max(
                            [&](double x) { return objective(lambda, x, beta); },
                            alpha_lo, alpha_hi)
                            .x;
                beta = std::exp(golden_section_max(
                                    [&](double z) {
                                        return objective(lambda, alpha, std::exp(z));
                                    },
                                    log_beta_lo, log_beta_hi)
                                    .x);
            }
            const double ll = objective(lambda, alpha, beta);
            if (std::isfinite(ll) && ll > best.log_likelihood) {
                best.params = HawkesParams{lambda, alpha, beta};
                best.log_likelihood = ll;
                any = true;
            }
        }
    }
    if (!any)
        throw_error(ErrorKind::kFitFailed, "no Hawkes start produced a finite likelihood");
    best.aic = 2.0 * 3.0 - 2.0 * best.log_likelihood;
    return best;
}

AicComparison compare_aic(const EventSeries& series, const MixtureFit& busca_fit,
                          const HawkesFit& hawkes_fit) {
    const double busca_ll =
        expected_loglik(series, busca_fit.params,
                        compute_estep(series, busca_fit.params));
    AicComparison cmp;
    cmp.aic_busca = 2.0 * 2.0 - 2.0 * busca_ll;
    cmp.aic_hawkes = hawkes_fit.aic;
    cmp.winner = cmp.aic_busca <= cmp.aic_hawkes ? AicWinner::kBusca : AicWinner::kHawkes;
    return cmp;
}

EventSeries simulate_hawkes(const HawkesParams& params, double a, double b,
                            std::uint64_t seed, std::string id) {
    params.validate();
    if (!(params.lambda_p > 0.0) || !(params.beta > 0.0))
        throw_error(ErrorKind::kInvalidArgument,
                    "simulate_hawkes needs lambda_p > 0 and beta > 0");
    if (!(b > a))
        throw_error(ErrorKind::kInvalidArgument, "window must satisfy b > a");

    Rng rng(seed);
    const double excitation = params.alpha * params.beta;
    std::vector<double> events;
    double t = a;
    double decayed = 0.0; // sum of exp(-beta*(t - t_i)) over accepted events
    while (true) {
        const double bound = params.lambda_p + excitation * decayed;
        const double next = t + rng.exponential(1.0 / bound);
        if (next > b) break;
        decayed *= std::exp(-params.beta * (next - t));
        t = next;
        const double intensity = params.lambda_p + excitation * decayed;
        if (rng.uniform() < intensity / bound) {
            const double stamp =
                events.empty() || t > events.back()
                    ? t
                    : std::nextafter(events.back(),
                                     std::numeric_limits<double>::infinity());
            events.push_back(stamp);
            decayed += 1.0;
        }
    }
    return validate_series(std::move(events), a, b, std::move(id));
}

} // namespace busca
