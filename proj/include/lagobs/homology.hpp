#ifndef LAGOBS_HOMOLOGY_HPP
#define LAGOBS_HOMOLOGY_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lagobs {

/// Raised on domain violations (bad degrees, invalid families, rank constraints).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Closed interval [lo, hi] bounding the dimension of a Z2 vector space.
 * hi may be unbounded; an unbounded hi compares greater than any integer.
 */
class DimBound {
public:
    static constexpr std::int64_t kUnbounded = -1;

    constexpr DimBound() = default;

    static DimBound exactly(std::int64_t d);
    static DimBound between(std::int64_t lo, std::int64_t hi);
    static DimBound atLeast(std::int64_t lo);

    std::int64_t lo() const { return lo_; }
    /// Only meaningful when bounded().
    std::int64_t hi() const { return hi_; }
    bool bounded() const { return hi_ != kUnbounded; }
    bool known() const { return bounded() && lo_ == hi_; }

    /// The exact value; throws if the bound is not known.
    std::int64_t value() const;

    /// True if d lies inside the interval.
    bool contains(std::int64_t d) const;

    DimBound operator+(const DimBound& other) const;

    bool operator==(const DimBound&) const = default;

private:
    constexpr DimBound(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {}

    std::int64_t lo_ = 0;
    std::int64_t hi_ = 0;
};

std::string to_string(const DimBound& b);

/**
 * Graded Z2 Betti numbers over degrees 0..n. Every slot is an interval so
 * partially known homology (only a few degrees pinned down) can be carried
 * through the obstruction arguments. Degrees outside [0, n] read as exactly 0.
 *
 * The optional cap records a bound on the total Betti number that was used
 * to derive the hi ends of unlisted slots.
 */
class BettiProfile {
public:
    using Entry = std::pair<int, std::int64_t>;

    BettiProfile() = default;
    BettiProfile(int n, std::vector<DimBound> slots, std::optional<std::int64_t> cap = std::nullopt);

    int top() const { return n_; }
    const std::vector<DimBound>& slots() const { return slots_; }
    const std::optional<std::int64_t>& cap() const { return cap_; }

    DimBound at(int degree) const;
    bool fully_known() const;

    /// Exact dims over 0..n; throws if any slot is unknown.
    std::vector<std::int64_t> dims() const;

    /// Same profile with exactly-zero slots appended up to degree new_top.
    BettiProfile padded(int new_top) const;

    bool operator==(const BettiProfile&) const = default;

private:
    int n_ = 0;
    std::vector<DimBound> slots_{DimBound::exactly(0)};
    std::optional<std::int64_t> cap_;
};

/// Fully known profile; unlisted degrees are 0.
BettiProfile make_profile(int n, const std::vector<BettiProfile::Entry>& entries);

/**
 * Partially known profile. Unlisted degrees get lo = 0 and
 * hi = cap - (sum of known dims), or unbounded without a cap.
 */
BettiProfile make_partial_profile(int n,
                                  const std::vector<BettiProfile::Entry>& known,
                                  std::optional<std::int64_t> cap = std::nullopt);

/// Profile from an explicit dimension list over degrees 0..dims.size()-1.
BettiProfile profile_from_dims(const std::vector<std::int64_t>& dims);

std::int64_t euler_char(const BettiProfile& p);
DimBound total_betti(const BettiProfile& p);
bool check_poincare(const BettiProfile& p);

}  // namespace lagobs

#endif  // LAGOBS_HOMOLOGY_HPP
