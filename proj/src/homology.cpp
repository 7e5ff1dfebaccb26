#include "lagobs/homology.hpp"

#include <algorithm>
#include <set>

namespace lagobs {

DimBound DimBound::exactly(std::int64_t d) {
    if (d < 0) throw DomainError("dimension must be non-negative, got " + std::to_string(d));
    return DimBound(d, d);
}

DimBound DimBound::between(std::int64_t lo, std::int64_t hi) {
    if (lo < 0 || hi < lo)
        throw DomainError("invalid dimension interval [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return DimBound(lo, hi);
}

DimBound DimBound::atLeast(std::int64_t lo) {
    if (lo < 0) throw DomainError("dimension must be non-negative, got " + std::to_string(lo));
    return DimBound(lo, kUnbounded);
}

std::int64_t DimBound::value() const {
    if (!known()) throw DomainError("dimension " + to_string(*this) + " is not exactly known");
    return lo_;
}

bool DimBound::contains(std::int64_t d) const {
    return d >= lo_ && (!bounded() || d <= hi_);
}

DimBound DimBound::operator+(const DimBound& other) const {
    if (!bounded() || !other.bounded()) return DimBound(lo_ + other.lo_, kUnbounded);
    return DimBound(lo_ + other.lo_, hi_ + other.hi_);
}

std::string to_string(const DimBound& b) {
    if (b.known()) return std::to_string(b.lo());
    return "[" + std::to_string(b.lo()) + ", " + (b.bounded() ? std::to_string(b.hi()) : std::string("inf")) + "]";
}

BettiProfile::BettiProfile(int n, std::vector<DimBound> slots, std::optional<std::int64_t> cap)
    : n_(n), slots_(std::move(slots)), cap_(cap) {
    if (n_ < 0) throw DomainError("top degree must be non-negative");
    if (slots_.size() != static_cast<std::size_t>(n_) + 1)
        throw DomainError("profile needs exactly n+1 slots");
    if (cap_ && *cap_ < 0) throw DomainError("total cap must be non-negative");
}

DimBound BettiProfile::at(int degree) const {
    if (degree < 0 || degree > n_) return DimBound::exactly(0);
    return slots_[static_cast<std::size_t>(degree)];
}

bool BettiProfile::fully_known() const {
    return std::all_of(slots_.begin(), slots_.end(), [](const DimBound& b) { return b.known(); });
}

std::vector<std::int64_t> BettiProfile::dims() const {
    std::vector<std::int64_t> out;
    out.reserve(slots_.size());
    for (const auto& b : slots_) out.push_back(b.value());
    return out;
}

BettiProfile BettiProfile::padded(int new_top) const {
    if (new_top < n_) throw DomainError("padding cannot shrink a profile");
    auto slots = slots_;
    slots.resize(static_cast<std::size_t>(new_top) + 1, DimBound::exactly(0));
    return BettiProfile(new_top, std::move(slots), cap_);
}

namespace {

void check_entries(int n, const std::vector<BettiProfile::Entry>& entries) {
    if (n < 0) throw DomainError("top degree must be non-negative, got " + std::to_string(n));
    std::set<int> seen;
    for (const auto& [degree, dim] : entries) {
        if (degree < 0 || degree > n)
            throw DomainError("degree " + std::to_string(degree) + " outside [0, " + std::to_string(n) + "]");
        if (dim < 0) throw DomainError("negative dimension at degree " + std::to_string(degree));
        if (!seen.insert(degree).second) throw DomainError("duplicate degree " + std::to_string(degree));
    }
}

}  // namespace

BettiProfile make_profile(int n, const std::vector<BettiProfile::Entry>& entries) {
    check_entries(n, entries);
    std::vector<DimBound> slots(static_cast<std::size_t>(n) + 1, DimBound::exactly(0));
    for (const auto& [degree, dim] : entries) slots[static_cast<std::size_t>(degree)] = DimBound::exactly(dim);
    return BettiProfile(n, std::move(slots));
}

BettiProfile make_partial_profile(int n,
                                  const std::vector<BettiProfile::Entry>& known,
                                  std::optional<std::int64_t> cap) {
    check_entries(n, known);
    std::int64_t known_sum = 0;
    for (const auto& e : known) known_sum += e.second;
    if (cap && known_sum > *cap)
        throw DomainError("known entries sum to " + std::to_string(known_sum) + ", exceeding cap " +
                          std::to_string(*cap));

    const DimBound free = cap ? DimBound::between(0, *cap - known_sum) : DimBound::atLeast(0);
    std::vector<DimBound> slots(static_cast<std::size_t>(n) + 1, free);
    for (const auto& [degree, dim] : known) slots[static_cast<std::size_t>(degree)] = DimBound::exactly(dim);
    return BettiProfile(n, std::move(slots), cap);
}

BettiProfile profile_from_dims(const std::vector<std::int64_t>& dims) {
    if (dims.empty()) throw DomainError("profile needs at least one degree");
    std::vector<BettiProfile::Entry> entries;
    for (std::size_t s = 0; s < dims.size(); ++s) entries.emplace_back(static_cast<int>(s), dims[s]);
    return make_profile(static_cast<int>(dims.size()) - 1, entries);
}

std::int64_t euler_char(const BettiProfile& p) {
    const auto d = p.dims();
    std::int64_t chi = 0;
    for (std::size_t s = 0; s < d.size(); ++s) chi += (s % 2 == 0) ? d[s] : -d[s];
    return chi;
}

DimBound total_betti(const BettiProfile& p) {
    DimBound sum = DimBound::exactly(0);
    for (const auto& b : p.slots()) sum = sum + b;
    if (p.cap() && (!sum.bounded() || sum.hi() > *p.cap()))
        return DimBound::between(sum.lo(), std::max(sum.lo(), *p.cap()));
    return sum;
}

bool check_poincare(const BettiProfile& p) {
    const auto d = p.dims();
    const std::size_t n = d.size() - 1;
    for (std::size_t s = 0; s <= n; ++s)
        if (d[s] != d[n - s]) return false;
    return true;
}

}  // namespace lagobs
