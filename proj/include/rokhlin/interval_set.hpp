#ifndef ROKHLIN_INTERVAL_SET_HPP
#define ROKHLIN_INTERVAL_SET_HPP

#include "rokhlin/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace rokhlin {

/// Half-open subinterval [lo, hi) of [0, 1]. lo == hi is the empty set.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    /// Throws DomainError unless 0 <= lo <= hi <= 1.
    Interval(Rational lo, Rational hi);

    bool empty() const { return lo == hi; }
    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x < hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of half-open subintervals of [0, 1) in canonical form:
/// parts are nonempty, sorted, pairwise disjoint and non-adjacent. Two
/// sets agree up to a finite (null) set of points iff their canonical
/// forms are identical.
class IntervalSet {
public:
    IntervalSet() = default;

    /// Canonical form of the union of `raw`. Degenerate parts are dropped
    /// and overlapping or touching parts are merged.
    static IntervalSet normalize(std::vector<Interval> raw);
    static IntervalSet full();
    static IntervalSet interval(const Rational& lo, const Rational& hi);

    /// Wraps parts that are already canonical; checked in debug builds.
    static IntervalSet from_canonical(std::vector<Interval> parts);

    const std::vector<Interval>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    bool contains(const Rational& x) const;
    /// Sum of part lengths (Lebesgue measure).
    Rational length() const;
    /// Every endpoint, in increasing order.
    std::vector<Rational> endpoints() const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    explicit IntervalSet(std::vector<Interval> parts) : parts_(std::move(parts)) {}
    std::vector<Interval> parts_;
};

IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet unite_all(std::span<const IntervalSet> sets);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet difference(const IntervalSet& a, const IntervalSet& b);
IntervalSet symmetric_difference(const IntervalSet& a, const IntervalSet& b);
/// [0,1) minus a.
IntervalSet complement(const IntervalSet& a);

/// a is contained in b (mod finitely many points).
bool is_subset(const IntervalSet& a, const IntervalSet& b);
/// a and b share a nonempty open interval.
bool intersects(const IntervalSet& a, const IntervalSet& b);

/// [[lo,hi),...]
std::ostream& operator<<(std::ostream& os, const IntervalSet& s);

}  // namespace rokhlin

#endif  // ROKHLIN_INTERVAL_SET_HPP
