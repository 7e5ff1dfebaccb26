#ifndef LAGOBS_CRITERIA_HPP
#define LAGOBS_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "lagobs/catalog.hpp"
#include "lagobs/homology.hpp"
#include "lagobs/specseq.hpp"

namespace lagobs {

enum class CaseStatus { Wide, NonDisplaceable, Unresolved };

std::string to_string(CaseStatus s);
CaseStatus case_status_from_string(const std::string& s);

enum class StepSource { Computed, Cited };

std::string to_string(StepSource s);
StepSource step_source_from_string(const std::string& s);

/// A full narrowness verdict together with the inputs needed to replay it.
struct VerdictRecord {
    BettiProfile profile;
    int maslov = 3;
    int nu = 0;
    NarrownessVerdict verdict;

    bool operator==(const VerdictRecord&) const = default;
};

struct JustificationStep {
    StepSource source = StepSource::Computed;
    std::string anchor;
    std::string detail;
    std::optional<VerdictRecord> verdict;

    bool operator==(const JustificationStep&) const = default;
};

struct CaseReport {
    IsoparametricFamily family;
    CaseStatus status = CaseStatus::Unresolved;
    std::vector<JustificationStep> justification;
    bool intersects_real_form = false;
    std::optional<double> volume_lower_bound;

    bool operator==(const CaseReport&) const = default;
};

/// Biran-Cornea: if H_i(L;Z2) = 0 whenever i = -1 mod N_L, then L is wide.
bool wide_check_biran_cornea(const BettiProfile& betti_L, int maslov);

/// Propagation decider on the covering N -> L.
NarrownessVerdict damian_nondisplaceable(const IsoparametricFamily& f);

/// Half the volume of the unit n-sphere.
double volume_lower_bound(int n);

CaseReport classify(const IsoparametricFamily& f);

}  // namespace lagobs

#endif  // LAGOBS_CRITERIA_HPP
