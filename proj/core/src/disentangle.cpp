#include "busca/disentangle.hpp"

#include <vector>

#include "busca/estimate.hpp"
#include "busca/goodness.hpp"

namespace busca {

LabelAssignment disentangle(const EventSeries& series, const MixtureFit& fit,
                            int replications, std::uint64_t seed) {
    if (replications < 1)
        throw_error(ErrorKind::kInvalidArgument, "replications must be >= 1");
    const auto ts = series.timestamps();

    bool found = false;
    double best_score = -1.0;
    LabelAssignment best;

    for (int rep = 0; rep < replications; ++rep) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(rep)));
        const auto survives = sfp_survivor_mask(series, fit.params.lambda_p, rng);

        std::vector<double> pp_times, sfp_times;
        for (std::size_t i = 0; i < ts.size(); ++i)
            (survives[i] ? sfp_times : pp_times).push_back(ts[i]);

        double r2p = 0.0, r2s = 0.0;
        bool any = false;
        if (pp_times.size() >= 3) {
            r2p = r2_poisson(pp_times);
            any = true;
        }
        if (sfp_times.size() >= 4) {
            if (auto r2 = r2_sfp(sfp_times)) {
                r2s = *r2;
                any = true;
            }
        }
        if (!any) continue;

        const double score = std::min(r2p, r2s);
        if (!found || score > best_score) {
            found = true;
            best_score = score;
            best.labels.resize(ts.size());
            for (std::size_t i = 0; i < ts.size(); ++i)
                best.labels[i] = survives[i] ? EventLabel::kSfp : EventLabel::kPoisson;
            best.r2_poisson = r2p;
            best.r2_sfp = r2s;
        }
    }

    if (!found)
        throw_error(ErrorKind::kRefinementFailed,
                    "every disentangling replication was degenerate");
    return best;
}

} // namespace busca
