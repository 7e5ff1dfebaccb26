#include "lagobs/specseq.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace lagobs {

DimBound ReducedPage::at(int s) const {
    if (s < 0 || s > top()) return DimBound::exactly(0);
    return slots[static_cast<std::size_t>(s)];
}

bool ReducedPage::fully_known() const {
    return std::all_of(slots.begin(), slots.end(), [](const DimBound& b) { return b.known(); });
}

bool ReducedPage::all_zero() const {
    return std::all_of(slots.begin(), slots.end(), [](const DimBound& b) { return b.known() && b.lo() == 0; });
}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Contradiction: return "Contradiction";
        case VerdictKind::NoContradiction: return "NoContradiction";
        case VerdictKind::Feasible: return "Feasible";
        case VerdictKind::Infeasible: return "Infeasible";
    }
    return "?";
}

VerdictKind verdict_kind_from_string(const std::string& s) {
    for (auto k : {VerdictKind::Contradiction, VerdictKind::NoContradiction, VerdictKind::Feasible,
                   VerdictKind::Infeasible})
        if (to_string(k) == s) return k;
    throw DomainError("unknown verdict kind '" + s + "'");
}

namespace {

void require_floer_defined(int maslov) {
    if (maslov < 3)
        throw DomainError("lifted Floer theory not defined at minimal Maslov number " + std::to_string(maslov) +
                          " (requires N_L >= 3)");
}

void require_nu(int nu) {
    if (nu < 0) throw DomainError("collapse index must be non-negative");
}

// -1 stands for unbounded.
std::int64_t hi_key(const DimBound& b) { return b.bounded() ? b.hi() : -1; }

// lo_{r+1}[s] >= lo_r[s] - hi_r[s - shift] - hi_r[s + shift], clamped at 0.
std::int64_t exactness_bound(std::int64_t lo, const DimBound& below, const DimBound& above) {
    if (!below.bounded() || !above.bounded()) return 0;
    return std::max<std::int64_t>(0, lo - below.hi() - above.hi());
}

}  // namespace

ReducedPage init_page(const BettiProfile& h, int maslov) {
    require_floer_defined(maslov);
    return ReducedPage{1, maslov, h.slots()};
}

std::optional<std::string> rank_violation(const ReducedPage& p, const RankVector& ranks) {
    if (ranks.r != p.r)
        return "rank vector is for page " + std::to_string(ranks.r) + " but page is " + std::to_string(p.r);
    if (ranks.ranks.size() != p.slots.size())
        return "rank vector has " + std::to_string(ranks.ranks.size()) + " entries, page has " +
               std::to_string(p.slots.size()) + " slots";
    const int shift = p.shift();
    for (int s = 0; s <= p.top(); ++s) {
        const std::int64_t a = ranks.ranks[static_cast<std::size_t>(s)];
        const std::string where = "slot " + std::to_string(s) + ": ";
        if (a < 0) return where + "negative rank";
        const std::int64_t domain = p.at(s).value();
        const std::int64_t codomain = p.at(s + shift).value();
        if (a > domain) return where + "rank " + std::to_string(a) + " exceeds domain dim " + std::to_string(domain);
        if (a > codomain)
            return where + "rank " + std::to_string(a) + " exceeds codomain dim " + std::to_string(codomain) +
                   " at slot " + std::to_string(s + shift);
        const std::int64_t incoming = s - shift >= 0 ? ranks.ranks[static_cast<std::size_t>(s - shift)] : 0;
        if (a + incoming > domain)
            return where + "incoming image " + std::to_string(incoming) + " plus outgoing rank " + std::to_string(a) +
                   " exceeds dim " + std::to_string(domain) + " (d o d = 0)";
    }
    return std::nullopt;
}

ReducedPage step_page(const ReducedPage& p, const RankVector& ranks) {
    if (!p.fully_known()) throw DomainError("step_page needs a fully known page");
    if (auto why = rank_violation(p, ranks)) throw DomainError("illegal rank vector on page " + std::to_string(p.r) + ": " + *why);

    const int shift = p.shift();
    ReducedPage next{p.r + 1, p.maslov, {}};
    next.slots.reserve(p.slots.size());
    for (int s = 0; s <= p.top(); ++s) {
        const std::int64_t incoming = s - shift >= 0 ? ranks.ranks[static_cast<std::size_t>(s - shift)] : 0;
        next.slots.push_back(DimBound::exactly(p.at(s).value() - ranks.ranks[static_cast<std::size_t>(s)] - incoming));
    }
    return next;
}

std::vector<ReducedPage> propagate_bounds(const BettiProfile& h, int maslov, int nu) {
    require_nu(nu);
    std::vector<ReducedPage> pages{init_page(h, maslov)};
    for (int r = 1; r <= nu; ++r) {
        const ReducedPage& cur = pages.back();
        const int shift = cur.shift();
        ReducedPage next{r + 1, maslov, {}};
        for (int s = 0; s <= cur.top(); ++s) {
            const DimBound b = cur.at(s);
            const std::int64_t lo = exactness_bound(b.lo(), cur.at(s - shift), cur.at(s + shift));
            next.slots.push_back(b.bounded() ? DimBound::between(lo, b.hi()) : DimBound::atLeast(lo));
        }
        pages.push_back(std::move(next));
    }
    return pages;
}

NarrownessVerdict propagate_narrow(const BettiProfile& h, int maslov, int n, int nu) {
    const auto pages = propagate_bounds(h, maslov, nu);
    const ReducedPage& last = pages.back();

    NarrownessVerdict v;
    v.page = nu + 1;

    std::vector<std::pair<int, std::int64_t>> forced;
    for (int s = 0; s <= last.top(); ++s)
        if (last.at(s).lo() > 0) forced.emplace_back(s, last.at(s).lo());

    if (forced.empty()) {
        NoContradictionWitness w;
        for (const auto& b : last.slots) w.final_lower_bounds.push_back(b.lo());
        v.kind = VerdictKind::NoContradiction;
        v.witness = std::move(w);
        return v;
    }

    // Strongest bound first, then nearest the middle degree, then lowest degree.
    const auto best = std::min_element(forced.begin(), forced.end(), [n](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        const int da = std::abs(2 * a.first - n), db = std::abs(2 * b.first - n);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    const int slot = best->first;

    ContradictionWitness w;
    w.lower_bound = best->second;
    w.forced_slots = forced;
    for (int r = 1; r <= nu; ++r) {
        const ReducedPage& cur = pages[static_cast<std::size_t>(r - 1)];
        const int shift = cur.shift();
        w.chain.push_back(ChainLink{r, shift, slot - shift, cur.at(slot - shift), slot + shift, cur.at(slot + shift),
                                    cur.at(slot).lo(), pages[static_cast<std::size_t>(r)].at(slot).lo()});
    }
    v.kind = VerdictKind::Contradiction;
    v.slot = slot;
    v.witness = std::move(w);
    return v;
}

namespace {

class RankSearch {
public:
    RankSearch(int maslov, int nu) : maslov_(maslov), nu_(nu) {}

    // Ranks for pages r..nu taking `dims` to the zero page, if any.
    bool solve(int r, const std::vector<std::int64_t>& dims, std::vector<RankVector>& out) {
        if (r == nu_ + 1) return std::all_of(dims.begin(), dims.end(), [](std::int64_t d) { return d == 0; });
        if (dead_.contains({r, dims})) return false;
        ++explored_;

        RankVector ranks{r, std::vector<std::int64_t>(dims.size(), 0)};
        if (assign(r, dims, 0, ranks, out)) return true;
        dead_.insert({r, dims});
        return false;
    }

    std::int64_t explored() const { return explored_; }

private:
    bool assign(int r, const std::vector<std::int64_t>& dims, int s, RankVector& ranks, std::vector<RankVector>& out) {
        const int top = static_cast<int>(dims.size()) - 1;
        const int shift = r * maslov_ - 1;
        if (s > top) {
            std::vector<std::int64_t> next(dims.size());
            for (int t = 0; t <= top; ++t) {
                const std::int64_t incoming = t - shift >= 0 ? ranks.ranks[static_cast<std::size_t>(t - shift)] : 0;
                next[static_cast<std::size_t>(t)] = dims[static_cast<std::size_t>(t)] - ranks.ranks[static_cast<std::size_t>(t)] - incoming;
            }
            out.push_back(ranks);
            if (solve(r + 1, next, out)) return true;
            out.pop_back();
            return false;
        }

        std::int64_t cap = 0;
        if (s + shift <= top) {
            const std::int64_t incoming = s - shift >= 0 ? ranks.ranks[static_cast<std::size_t>(s - shift)] : 0;
            cap = std::min(dims[static_cast<std::size_t>(s)] - incoming, dims[static_cast<std::size_t>(s + shift)]);
        }
        for (std::int64_t a = cap; a >= 0; --a) {
            ranks.ranks[static_cast<std::size_t>(s)] = a;
            if (assign(r, dims, s + 1, ranks, out)) return true;
        }
        ranks.ranks[static_cast<std::size_t>(s)] = 0;
        return false;
    }

    int maslov_;
    int nu_;
    std::int64_t explored_ = 0;
    std::set<std::pair<int, std::vector<std::int64_t>>> dead_;
};

// Calls visit(completion) for each exact-dimension completion of h until it returns true.
template <typename Visit>
bool for_each_completion(const BettiProfile& h, Visit&& visit) {
    std::vector<std::int64_t> dims(h.slots().size());
    const std::int64_t budget = h.cap().value_or(-1);

    auto rec = [&](auto&& self, std::size_t s, std::int64_t used) -> bool {
        if (s == dims.size()) return visit(dims);
        const DimBound b = h.slots()[s];
        for (std::int64_t d = b.lo(); d <= b.hi(); ++d) {
            if (budget >= 0 && used + d > budget) break;
            dims[s] = d;
            if (self(self, s + 1, used + d)) return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace

NarrownessVerdict oracle_narrow_feasible(const BettiProfile& h, int maslov, int nu, std::int64_t search_cap) {
    require_floer_defined(maslov);
    require_nu(nu);
    std::int64_t mass = 0;
    for (const auto& b : h.slots()) {
        if (!b.bounded()) throw DomainError("oracle needs every slot bounded; profile has unknown slots");
        mass += b.hi();
    }
    if (mass > search_cap)
        throw DomainError("search cap exceeded: total dimension up to " + std::to_string(mass) + " > cap " +
                          std::to_string(search_cap));

    RankSearch search(maslov, nu);
    std::int64_t completions = 0;
    FeasibleWitness found;
    const bool feasible = for_each_completion(h, [&](const std::vector<std::int64_t>& dims) {
        ++completions;
        std::vector<RankVector> ranks;
        if (!search.solve(1, dims, ranks)) return false;
        found = FeasibleWitness{dims, std::move(ranks)};
        return true;
    });

    NarrownessVerdict v;
    v.page = nu + 1;
    if (feasible) {
        v.kind = VerdictKind::Feasible;
        v.witness = std::move(found);
    } else {
        v.kind = VerdictKind::Infeasible;
        v.witness = InfeasibleWitness{completions, search.explored()};
    }
    return v;
}

namespace {

bool replay_contradiction(const NarrownessVerdict& v, const ContradictionWitness& w, const BettiProfile& h,
                          int maslov, int nu) {
    if (!v.slot || v.page != nu + 1 || w.chain.size() != static_cast<std::size_t>(nu)) return false;
    const int s = *v.slot;
    if (s < 0 || s > h.top()) return false;

    // hi never moves under the propagation rules, so page-r neighbour bounds are the input's.
    std::int64_t lo = h.at(s).lo();
    for (int r = 1; r <= nu; ++r) {
        const ChainLink& link = w.chain[static_cast<std::size_t>(r - 1)];
        const int shift = r * maslov - 1;
        if (link.page != r || link.shift != shift) return false;
        if (link.below_degree != s - shift || link.above_degree != s + shift) return false;
        const DimBound below = h.at(s - shift), above = h.at(s + shift);
        if (hi_key(link.below) != hi_key(below) ||
            hi_key(link.above) != hi_key(above))
            return false;
        if (link.lo_before != lo) return false;
        lo = exactness_bound(lo, below, above);
        if (link.lo_after != lo) return false;
    }
    return lo > 0 && lo == w.lower_bound;
}

bool replay_feasible(const FeasibleWitness& w, const BettiProfile& h, int maslov, int nu) {
    if (w.completion.size() != h.slots().size() || w.ranks.size() != static_cast<std::size_t>(nu)) return false;
    std::int64_t total = 0;
    for (std::size_t s = 0; s < w.completion.size(); ++s) {
        if (!h.slots()[s].contains(w.completion[s])) return false;
        total += w.completion[s];
    }
    if (h.cap() && total > *h.cap()) return false;

    ReducedPage page = init_page(profile_from_dims(w.completion), maslov);
    for (const auto& ranks : w.ranks) {
        if (rank_violation(page, ranks)) return false;
        page = step_page(page, ranks);
    }
    return page.all_zero();
}

}  // namespace

bool replay_witness(const NarrownessVerdict& v, const BettiProfile& h, int maslov, int nu) {
    require_floer_defined(maslov);
    require_nu(nu);
    const bool shape_ok = std::visit(
        [&](const auto& w) {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, ContradictionWitness>) return v.kind == VerdictKind::Contradiction;
            if constexpr (std::is_same_v<W, NoContradictionWitness>) return v.kind == VerdictKind::NoContradiction;
            if constexpr (std::is_same_v<W, FeasibleWitness>) return v.kind == VerdictKind::Feasible;
            if constexpr (std::is_same_v<W, InfeasibleWitness>) return v.kind == VerdictKind::Infeasible;
        },
        v.witness);
    if (!shape_ok) throw DomainError("malformed witness: payload does not match verdict kind " + to_string(v.kind));

    switch (v.kind) {
        case VerdictKind::Contradiction:
            return replay_contradiction(v, std::get<ContradictionWitness>(v.witness), h, maslov, nu);
        case VerdictKind::NoContradiction: {
            if (v.slot || v.page != nu + 1) return false;
            const auto& w = std::get<NoContradictionWitness>(v.witness);
            const auto last = propagate_bounds(h, maslov, nu).back();
            if (w.final_lower_bounds.size() != last.slots.size()) return false;
            for (std::size_t s = 0; s < last.slots.size(); ++s)
                if (w.final_lower_bounds[s] != last.slots[s].lo() || w.final_lower_bounds[s] != 0) return false;
            return true;
        }
        case VerdictKind::Feasible:
            return v.page == nu + 1 && replay_feasible(std::get<FeasibleWitness>(v.witness), h, maslov, nu);
        case VerdictKind::Infeasible: {
            std::int64_t mass = 0;
            for (const auto& b : h.slots()) mass += b.bounded() ? b.hi() : 0;
            const auto again = oracle_narrow_feasible(h, maslov, nu, std::max(mass, kDefaultSearchCap));
            return v.page == nu + 1 && again == v;
        }
    }
    return false;
}

}  // namespace lagobs
