#include "busca/classify.hpp"

#include <algorithm>
#include <cmath>

#include "busca/likelihood.hpp"
#include "busca/stats.hpp"

namespace busca {

double lrt_statistic(const EventSeries& series, const MixtureFit& fit, NullModel null) {
    double null_max;
    if (null == NullModel::kPurePoisson) {
        null_max = poisson_loglik(series).log_likelihood;
    } else {
        const double n = static_cast<double>(series.size());
        const double span = series.last() - series.window_start();
        const double mu_lo = series.window_length() / (10.0 * n);
        const double mu_hi = span;
        null_max = golden_section_max(
                       [&](double z) { return sfp_loglik(series, std::exp(z)); },
                       std::log(mu_lo), std::log(mu_hi))
                       .value;
    }
    return std::max(0.0, 2.0 * (fit.log_likelihood - null_max));
}

ClassificationResult classify(const EventSeries& series, const MixtureFit& fit,
                              double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw_error(ErrorKind::kInvalidArgument, "alpha must be in (0, 1)");
    ClassificationResult result;
    result.alpha = alpha;
    result.phi_p = chi2_survival_1df(lrt_statistic(series, fit, NullModel::kPurePoisson));
    result.phi_s = chi2_survival_1df(lrt_statistic(series, fit, NullModel::kPureSfp));

    const bool accepts_pp = result.phi_p > alpha;
    const bool accepts_sfp = result.phi_s > alpha;
    if (accepts_pp && !accepts_sfp)
        result.verdict = Verdict::kPurePoisson;
    else if (accepts_sfp && !accepts_pp)
        result.verdict = Verdict::kPureSfp;
    else if (!accepts_pp && !accepts_sfp)
        result.verdict = Verdict::kMixed;
    else
        result.verdict = Verdict::kAmbiguous;
    return result;
}

} // namespace busca
