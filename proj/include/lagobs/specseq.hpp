#ifndef LAGOBS_SPECSEQ_HPP
#define LAGOBS_SPECSEQ_HPP

// Algebraic model of the lifted-Floer spectral sequence of a monotone
// Lagrangian L with minimal Maslov number N_L >= 3, computed from the
// Z2 homology of a covering L' -> L.
//
// Reduced single-index form. The bigraded page is
//   E_r^{p,q} = V_r^{p,q} (x) Lambda^{p N_L},   V_1^{p,q} = H_{p+q-p N_L}(L'; Z2),
// with d_r = delta_r (x) T^{-r N_L} and delta_r : V_r^{p,q} -> V_r^{p-r,q+r-1}.
// Put s = p + q - p N_L. Every V_1^{p,q} depends on (p,q) only through s, the
// recursion V_{r+1} = ker delta_r / im delta_r preserves that, and the target
// (p-r, q+r-1) has index s + r N_L - 1. The Laurent factor is one-dimensional
// in each degree and so carries no rank information over Z2. A page is thus a
// single array V_r[s], s = 0..n, and delta_r shifts s by r N_L - 1.
//
// The sequence is stationary from page nu+1, nu = floor((dim L + 1)/N_L), and
// each column of that page adds up to the lifted Floer homology. Vanishing
// Floer homology therefore forces every slot of page nu+1 to be zero; the two
// deciders below ask whether that is possible.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lagobs/homology.hpp"

namespace lagobs {

/// One page V_r in single-index form.
struct ReducedPage {
    int r = 1;
    int maslov = 3;
    std::vector<DimBound> slots;

    int top() const { return static_cast<int>(slots.size()) - 1; }
    /// Shift of delta_r in the slot index: r * N_L - 1.
    int shift() const { return r * maslov - 1; }
    DimBound at(int s) const;
    bool fully_known() const;
    bool all_zero() const;

    bool operator==(const ReducedPage&) const = default;
};

/// ranks[s] = rank of the component of delta_r from slot s into slot s + shift.
struct RankVector {
    int r = 1;
    std::vector<std::int64_t> ranks;

    bool operator==(const RankVector&) const = default;
};

enum class VerdictKind { Contradiction, NoContradiction, Feasible, Infeasible };

std::string to_string(VerdictKind k);
VerdictKind verdict_kind_from_string(const std::string& s);

/// One application of the exactness bound to the witness slot.
struct ChainLink {
    int page = 1;
    int shift = 0;
    int below_degree = 0;
    DimBound below;
    int above_degree = 0;
    DimBound above;
    std::int64_t lo_before = 0;
    std::int64_t lo_after = 0;

    bool operator==(const ChainLink&) const = default;
};

struct ContradictionWitness {
    std::int64_t lower_bound = 0;
    std::vector<ChainLink> chain;
    /// Every (slot, lower bound) with a positive bound on the final page.
    std::vector<std::pair<int, std::int64_t>> forced_slots;

    bool operator==(const ContradictionWitness&) const = default;
};

struct NoContradictionWitness {
    std::vector<std::int64_t> final_lower_bounds;

    bool operator==(const NoContradictionWitness&) const = default;
};

struct FeasibleWitness {
    /// Exact dims chosen for the input profile (the profile itself if fully known).
    std::vector<std::int64_t> completion;
    /// Differential ranks for pages 1..nu.
    std::vector<RankVector> ranks;

    bool operator==(const FeasibleWitness&) const = default;
};

struct InfeasibleWitness {
    std::int64_t completions = 0;
    std::int64_t explored_states = 0;

    bool operator==(const InfeasibleWitness&) const = default;
};

using Witness = std::variant<ContradictionWitness, NoContradictionWitness, FeasibleWitness, InfeasibleWitness>;

struct NarrownessVerdict {
    VerdictKind kind = VerdictKind::NoContradiction;
    std::optional<int> slot;
    /// Page the verdict is about: nu + 1.
    int page = 1;
    Witness witness;

    bool operator==(const NarrownessVerdict&) const = default;
};

ReducedPage init_page(const BettiProfile& h, int maslov);

ReducedPage step_page(const ReducedPage& p, const RankVector& ranks);

/// Checks the rank constraints; returns a description of the first violation.
std::optional<std::string> rank_violation(const ReducedPage& p, const RankVector& ranks);

/// Interval bounds on pages 1..nu+1 under the exactness bound.
std::vector<ReducedPage> propagate_bounds(const BettiProfile& h, int maslov, int nu);

/// Sound propagation decider. n is dim L; among equally strong forced slots
/// the one nearest n/2 is reported.
NarrownessVerdict propagate_narrow(const BettiProfile& h, int maslov, int n, int nu);

inline constexpr std::int64_t kDefaultSearchCap = 64;

/// Exhaustive rank-assignment decider.
NarrownessVerdict oracle_narrow_feasible(const BettiProfile& h, int maslov, int nu,
                                         std::int64_t search_cap = kDefaultSearchCap);

/// Re-derives the verdict's claim from the inputs.
bool replay_witness(const NarrownessVerdict& v, const BettiProfile& h, int maslov, int nu);

}  // namespace lagobs

#endif  // LAGOBS_SPECSEQ_HPP
