#include "lagobs/criteria.hpp"

#include <cmath>
#include <numbers>

namespace lagobs {

std::string to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::Wide: return "Wide";
        case CaseStatus::NonDisplaceable: return "NonDisplaceable";
        case CaseStatus::Unresolved: return "Unresolved";
    }
    return "?";
}

CaseStatus case_status_from_string(const std::string& s) {
    for (auto c : {CaseStatus::Wide, CaseStatus::NonDisplaceable, CaseStatus::Unresolved})
        if (to_string(c) == s) return c;
    throw DomainError("unknown case status '" + s + "'");
}

std::string to_string(StepSource s) { return s == StepSource::Computed ? "computed" : "cited"; }

StepSource step_source_from_string(const std::string& s) {
    if (s == "computed") return StepSource::Computed;
    if (s == "cited") return StepSource::Cited;
    throw DomainError("unknown justification source '" + s + "'");
}

bool wide_check_biran_cornea(const BettiProfile& betti_L, int maslov) {
    if (maslov < 2) throw DomainError("wideness criterion needs N_L >= 2");
    for (int i = maslov - 1; i <= betti_L.top(); i += maslov) {
        const DimBound b = betti_L.at(i);
        if (!b.known()) throw DomainError("unknown dimension at tested degree " + std::to_string(i));
        if (b.value() != 0) return false;
    }
    return true;
}

NarrownessVerdict damian_nondisplaceable(const IsoparametricFamily& f) {
    const int maslov = minimal_maslov(f);
    if (maslov < 3)
        throw DomainError("lifted Floer theory not defined for " + to_string(f) + ": N_L = " + std::to_string(maslov));
    return propagate_narrow(munzner_betti_N(f), maslov, f.n, collapse_step(f));
}

double volume_lower_bound(int n) {
    if (n < 1) throw DomainError("sphere dimension must be positive");
    const double half = (n + 1) / 2.0;
    return std::pow(std::numbers::pi, half) / std::tgamma(half);
}

namespace {

std::string profile_text(const BettiProfile& p) {
    std::string s = "[";
    for (int d = 0; d <= p.top(); ++d) s += (d ? "," : "") + to_string(p.at(d));
    return s + "]";
}

}  // namespace

CaseReport classify(const IsoparametricFamily& f) {
    CaseReport report;
    report.family = f;
    auto& steps = report.justification;
    const int maslov = minimal_maslov(f);

    auto mark_wide = [&] {
        report.status = CaseStatus::Wide;
        // Wide implies HF(L) != 0, and in Q_n(C), n >= 2, that meets the real form S^n.
        report.intersects_real_form = f.n >= 2;
    };

    if (f.g == 1 || f.g == 2) {
        for (const auto& fact : cited_facts(f)) steps.push_back({StepSource::Cited, fact.id, fact.source, std::nullopt});
        mark_wide();
        return report;
    }

    if (f.g == 3) {
        const GaussImageHomology homology = gauss_image_betti_g3(f);
        steps.push_back({homology.cited ? StepSource::Cited : StepSource::Computed,
                         homology.cited ? "z2-homology-sphere-3dim" : "transfer-euler-characteristic",
                         "H_*(L;Z2) = " + profile_text(homology.profile), std::nullopt});
        const bool wide = wide_check_biran_cornea(homology.profile, maslov);
        steps.push_back({StepSource::Computed, "biran-cornea-wideness",
                         std::string("H_i(L;Z2) ") + (wide ? "vanishes" : "does not vanish") +
                             " for all i = -1 mod " + std::to_string(maslov),
                         std::nullopt});
        if (wide) {
            mark_wide();
            report.volume_lower_bound = volume_lower_bound(f.n);
        }
        return report;
    }

    steps.push_back({StepSource::Computed, "minimal-maslov", "N_L = 2n/g = " + std::to_string(maslov), std::nullopt});
    if (maslov < 3) {
        steps.push_back({StepSource::Computed, "lifted-floer-undefined",
                         "N_L = 2: lifted Floer spectral sequence unavailable", std::nullopt});
        return report;
    }

    const BettiProfile cover = munzner_betti_N(f);
    const int nu = collapse_step(f);
    VerdictRecord record{cover, maslov, nu, damian_nondisplaceable(f)};
    const bool contradiction = record.verdict.kind == VerdictKind::Contradiction;
    std::string detail = "covering N, nu = " + std::to_string(nu) + ": ";
    if (contradiction) {
        const auto& w = std::get<ContradictionWitness>(record.verdict.witness);
        detail += "narrowness forces dim >= " + std::to_string(w.lower_bound) + " at slot " +
                  std::to_string(*record.verdict.slot) + " of page " + std::to_string(record.verdict.page);
    } else {
        detail += "no narrowness contradiction derivable";
    }
    steps.push_back({StepSource::Computed, "lifted-floer-spectral-sequence", detail, std::move(record)});
    if (contradiction) report.status = CaseStatus::NonDisplaceable;
    return report;
}

}  // namespace lagobs
