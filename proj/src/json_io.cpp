#include "lagobs/json_io.hpp"

#include <fstream>

namespace lagobs {

namespace {

// Wraps schema lookups so nlohmann and domain errors surface as FormatError.
template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const FormatError&) {
        throw;
    } catch (const json::exception& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    } catch (const DomainError& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
}

json bound_to_json(const DimBound& b) {
    return {{"lo", b.lo()}, {"hi", b.bounded() ? json(b.hi()) : json(nullptr)}};
}

DimBound bound_from_json(const json& j) {
    const auto lo = j.at("lo").get<std::int64_t>();
    const json& hi = j.at("hi");
    return hi.is_null() ? DimBound::atLeast(lo) : DimBound::between(lo, hi.get<std::int64_t>());
}

json witness_to_json(const Witness& w) {
    return std::visit(
        [](const auto& x) -> json {
            using W = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<W, ContradictionWitness>) {
                json chain = json::array();
                for (const auto& l : x.chain)
                    chain.push_back({{"page", l.page},
                                     {"shift", l.shift},
                                     {"below", {{"degree", l.below_degree}, {"bound", bound_to_json(l.below)}}},
                                     {"above", {{"degree", l.above_degree}, {"bound", bound_to_json(l.above)}}},
                                     {"lo_before", l.lo_before},
                                     {"lo_after", l.lo_after}});
                return {{"lower_bound", x.lower_bound}, {"chain", chain}, {"forced_slots", x.forced_slots}};
            } else if constexpr (std::is_same_v<W, NoContradictionWitness>) {
                return {{"final_lower_bounds", x.final_lower_bounds}};
            } else if constexpr (std::is_same_v<W, FeasibleWitness>) {
                json ranks = json::array();
                for (const auto& rv : x.ranks) ranks.push_back({{"page", rv.r}, {"ranks", rv.ranks}});
                return {{"completion", x.completion}, {"ranks", ranks}};
            } else {
                return {{"completions", x.completions}, {"explored_states", x.explored_states}};
            }
        },
        w);
}

Witness witness_from_json(VerdictKind kind, const json& j) {
    switch (kind) {
        case VerdictKind::Contradiction: {
            ContradictionWitness w;
            w.lower_bound = j.at("lower_bound").get<std::int64_t>();
            for (const auto& l : j.at("chain"))
                w.chain.push_back(ChainLink{l.at("page").get<int>(), l.at("shift").get<int>(),
                                            l.at("below").at("degree").get<int>(), bound_from_json(l.at("below").at("bound")),
                                            l.at("above").at("degree").get<int>(), bound_from_json(l.at("above").at("bound")),
                                            l.at("lo_before").get<std::int64_t>(), l.at("lo_after").get<std::int64_t>()});
            w.forced_slots = j.at("forced_slots").get<std::vector<std::pair<int, std::int64_t>>>();
            return w;
        }
        case VerdictKind::NoContradiction:
            return NoContradictionWitness{j.at("final_lower_bounds").get<std::vector<std::int64_t>>()};
        case VerdictKind::Feasible: {
            FeasibleWitness w;
            w.completion = j.at("completion").get<std::vector<std::int64_t>>();
            for (const auto& rv : j.at("ranks"))
                w.ranks.push_back(RankVector{rv.at("page").get<int>(), rv.at("ranks").get<std::vector<std::int64_t>>()});
            return w;
        }
        case VerdictKind::Infeasible:
            return InfeasibleWitness{j.at("completions").get<std::int64_t>(), j.at("explored_states").get<std::int64_t>()};
    }
    throw FormatError("unhandled verdict kind");
}

}  // namespace

json profile_to_json(const BettiProfile& p) {
    json known = json::array();
    for (int d = 0; d <= p.top(); ++d)
        if (p.at(d).known()) known.push_back({d, p.at(d).value()});
    json out{{"n", p.top()}, {"known", known}, {"cap", p.cap() ? json(*p.cap()) : json(nullptr)}};
    if (profile_from_json(out) != p)
        throw DomainError("profile has interval slots that the known/cap encoding cannot express");
    return out;
}

BettiProfile profile_from_json(const json& j) {
    return guarded("profile", [&] {
        if (!j.is_object()) throw FormatError("profile: expected an object");
        const int n = j.at("n").get<int>();
        const auto known = j.at("known").get<std::vector<BettiProfile::Entry>>();
        std::optional<std::int64_t> cap;
        if (j.contains("cap") && !j.at("cap").is_null()) cap = j.at("cap").get<std::int64_t>();
        if (!cap && known.size() == static_cast<std::size_t>(n) + 1) return make_profile(n, known);
        return make_partial_profile(n, known, cap);
    });
}

json family_to_json(const IsoparametricFamily& f) {
    return {{"g", f.g}, {"m1", f.m1}, {"m2", f.m2}, {"n", f.n}};
}

IsoparametricFamily family_from_json(const json& j) {
    return guarded("family", [&] {
        const auto f = validate_family(j.at("g").get<int>(), j.at("m1").get<int>(), j.at("m2").get<int>());
        if (j.contains("n") && j.at("n").get<int>() != f.n) throw FormatError("family: n disagrees with g(m1+m2)/2");
        return f;
    });
}

json verdict_to_json(const VerdictRecord& v) {
    return {{"kind", to_string(v.verdict.kind)},
            {"slot", v.verdict.slot ? json(*v.verdict.slot) : json(nullptr)},
            {"page", v.verdict.page},
            {"witness", witness_to_json(v.verdict.witness)},
            {"profile", profile_to_json(v.profile)},
            {"maslov", v.maslov},
            {"nu", v.nu}};
}

VerdictRecord verdict_from_json(const json& j) {
    return guarded("verdict", [&] {
        if (!j.is_object()) throw FormatError("verdict: expected an object");
        VerdictRecord r;
        r.profile = profile_from_json(j.at("profile"));
        r.maslov = j.at("maslov").get<int>();
        r.nu = j.at("nu").get<int>();
        r.verdict.kind = verdict_kind_from_string(j.at("kind").get<std::string>());
        if (!j.at("slot").is_null()) r.verdict.slot = j.at("slot").get<int>();
        r.verdict.page = j.at("page").get<int>();
        r.verdict.witness = witness_from_json(r.verdict.kind, j.at("witness"));
        return r;
    });
}

json report_to_json(const CaseReport& r) {
    json steps = json::array();
    for (const auto& s : r.justification) {
        json step{{"source", to_string(s.source)}, {"anchor", s.anchor}, {"detail", s.detail}};
        if (s.verdict) step["verdict"] = verdict_to_json(*s.verdict);
        steps.push_back(std::move(step));
    }
    return {{"family", family_to_json(r.family)},
            {"status", to_string(r.status)},
            {"justification", steps},
            {"intersects_real_form", r.intersects_real_form},
            {"volume_lower_bound", r.volume_lower_bound ? json(*r.volume_lower_bound) : json(nullptr)}};
}

CaseReport report_from_json(const json& j) {
    return guarded("report", [&] {
        CaseReport r;
        r.family = family_from_json(j.at("family"));
        r.status = case_status_from_string(j.at("status").get<std::string>());
        for (const auto& s : j.at("justification")) {
            JustificationStep step{step_source_from_string(s.at("source").get<std::string>()),
                                   s.at("anchor").get<std::string>(), s.at("detail").get<std::string>(), std::nullopt};
            if (s.contains("verdict")) step.verdict = verdict_from_json(s.at("verdict"));
            r.justification.push_back(std::move(step));
        }
        r.intersects_real_form = j.at("intersects_real_form").get<bool>();
        if (!j.at("volume_lower_bound").is_null()) r.volume_lower_bound = j.at("volume_lower_bound").get<double>();
        return r;
    });
}

json gauss_image_to_json(const GaussImageData& d) {
    json cited = json::array();
    for (const auto& c : d.cited) cited.push_back({{"id", c.id}, {"statement", c.statement}, {"source", c.source}});
    json betti_L = nullptr;
    if (d.betti_L) betti_L = {{"profile", profile_to_json(d.betti_L->profile)}, {"cited", d.betti_L->cited}};
    return {{"family", family_to_json(d.family)},
            {"maslov", d.maslov},
            {"nu", d.nu},
            {"orientable", d.orientable},
            {"covering_degree", d.covering_degree},
            {"betti_N", d.betti_N ? profile_to_json(*d.betti_N) : json(nullptr)},
            {"betti_L", betti_L},
            {"cited", cited}};
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

}  // namespace lagobs
