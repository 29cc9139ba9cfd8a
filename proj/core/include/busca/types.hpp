#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "busca/errors.hpp"

namespace busca {

constexpr double kInfiniteMu = std::numeric_limits<double>::infinity();

/// Source process of a single event in a mixture realization.
enum class EventLabel : std::uint8_t { kPoisson, kSfp };

/// Outcome of the two likelihood-ratio tests.
enum class Verdict : std::uint8_t { kPurePoisson, kPureSfp, kMixed, kAmbiguous };

[[nodiscard]] std::string to_string(EventLabel label);
[[nodiscard]] std::string to_string(Verdict verdict);
[[nodiscard]] EventLabel event_label_from_string(const std::string& s);
[[nodiscard]] Verdict verdict_from_string(const std::string& s);

/// Parameters of the two-component mixture: a homogeneous Poisson rate and
/// the median inter-event time of the self-feeding component. `mu` may be
/// infinite (no self-feeding component); `lambda_p` may be zero (no Poisson
/// component); both at once is invalid.
struct MixtureParams {
    double lambda_p = 0.0;
    double mu = kInfiniteMu;

    [[nodiscard]] bool pure_poisson() const noexcept { return mu == kInfiniteMu; }
    [[nodiscard]] bool pure_sfp() const noexcept { return lambda_p == 0.0; }
    [[nodiscard]] bool mixed() const noexcept { return !pure_poisson() && !pure_sfp(); }

    void validate() const {
        if (!(lambda_p >= 0.0))
            throw_error(ErrorKind::kInvalidArgument, "lambda_p must be >= 0");
        if (!(mu > 0.0))
            throw_error(ErrorKind::kInvalidArgument, "mu must be > 0");
        if (pure_poisson() && pure_sfp())
            throw_error(ErrorKind::kInvalidArgument,
                        "degenerate mixture: lambda_p == 0 and mu == inf");
    }
};

/// Result of fitting the mixture to one series.
struct MixtureFit {
    MixtureParams params;
    double psi = 0.0;             // burstiness scale, percent in [0, 100]
    double log_likelihood = 0.0;  // expected mixture log-likelihood at `params`
    int em_iterations = 0;
    bool converged = false;
    bool mu_refined = false;
};

/// Per-event source labels plus the goodness-of-fit of the induced split.
/// An r2 of 0 means the corresponding component had too few events to score.
struct LabelAssignment {
    std::vector<EventLabel> labels;
    double r2_poisson = 0.0;
    double r2_sfp = 0.0;
};

/// p-values of the two pure-model null hypotheses and the combined verdict.
struct ClassificationResult {
    double phi_p = 1.0;
    double phi_s = 1.0;
    Verdict verdict = Verdict::kAmbiguous;
    double alpha = 0.05;
};

} // namespace busca
