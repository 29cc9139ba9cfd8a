#include "busca/types.hpp"

namespace busca {

std::string to_string(EventLabel label) {
    return label == EventLabel::kPoisson ? "POISSON" : "SFP";
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::kPurePoisson: return "PURE_POISSON";
        case Verdict::kPureSfp: return "PURE_SFP";
        case Verdict::kMixed: return "MIXED";
        case Verdict::kAmbiguous: return "AMBIGUOUS";
    }
    return "AMBIGUOUS";
}

EventLabel event_label_from_string(const std::string& s) {
    if (s == "POISSON") return EventLabel::kPoisson;
    if (s == "SFP") return EventLabel::kSfp;
    throw_error(ErrorKind::kInvalidArgument, "unknown event label: " + s);
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "PURE_POISSON") return Verdict::kPurePoisson;
    if (s == "PURE_SFP") return Verdict::kPureSfp;
    if (s == "MIXED") return Verdict::kMixed;
    if (s == "AMBIGUOUS") return Verdict::kAmbiguous;
    throw_error(ErrorKind::kInvalidArgument, "unknown verdict: " + s);
}

} // namespace busca
