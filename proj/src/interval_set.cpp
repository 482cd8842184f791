#include "rokhlin/interval_set.hpp"

#include "rokhlin/errors.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>

namespace rokhlin {

namespace {

// First part whose hi exceeds x. Parts are sorted and disjoint, so his
// are increasing too.
std::vector<Interval>::const_iterator first_ending_after(const std::vector<Interval>& parts, const Rational& x) {
    return std::upper_bound(parts.begin(), parts.end(), x,
                            [](const Rational& v, const Interval& p) { return v < p.hi; });
}

// Appends [lo, hi) to canonical `out`, merging with the last part when
// they touch. Requires lo >= out.back().lo.
void append_merge(std::vector<Interval>& out, const Rational& lo, const Rational& hi) {
    if (lo >= hi) return;
    if (!out.empty() && lo <= out.back().hi) {
        if (out.back().hi < hi) out.back().hi = hi;
        return;
    }
    out.push_back(Interval{lo, hi});
}

[[maybe_unused]] bool is_canonical(const std::vector<Interval>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty()) return false;
        if (i > 0 && !(parts[i - 1].hi < parts[i].lo)) return false;
    }
    return true;
}

}  // namespace

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo.sign() < 0 || hi > Rational(1) || hi < lo)
        throw DomainError("interval [" + lo.str() + ", " + hi.str() + ") is not a subinterval of [0,1]");
}

IntervalSet IntervalSet::normalize(std::vector<Interval> raw) {
    for (const auto& p : raw)
        if (p.lo.sign() < 0 || p.hi > Rational(1) || p.hi < p.lo)
            throw DomainError("interval [" + p.lo.str() + ", " + p.hi.str() + ") is not a subinterval of [0,1]");
    std::erase_if(raw, [](const Interval& p) { return p.empty(); });
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> out;
    out.reserve(raw.size());
    for (auto& p : raw) {
        if (!out.empty() && p.lo <= out.back().hi) {
            if (out.back().hi < p.hi) out.back().hi = std::move(p.hi);
        } else {
            out.push_back(std::move(p));
        }
    }
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::full() { return IntervalSet({Interval{Rational(0), Rational(1)}}); }

IntervalSet IntervalSet::interval(const Rational& lo, const Rational& hi) {
    return normalize({Interval{lo, hi}});
}

IntervalSet IntervalSet::from_canonical(std::vector<Interval> parts) {
    assert(is_canonical(parts));
    return IntervalSet(std::move(parts));
}

bool IntervalSet::contains(const Rational& x) const {
    auto it = first_ending_after(parts_, x);
    return it != parts_.end() && it->lo <= x;
}

Rational IntervalSet::length() const {
    mpq_class total;
    for (const auto& p : parts_) total += p.hi.raw() - p.lo.raw();
    return Rational(std::move(total));
}

std::vector<Rational> IntervalSet::endpoints() const {
    std::vector<Rational> out;
    out.reserve(2 * parts_.size());
    for (const auto& p : parts_) {
        out.push_back(p.lo);
        out.push_back(p.hi);
    }
    return out;
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
    const auto& pa = a.parts();
    const auto& pb = b.parts();
    std::vector<Interval> out;
    out.reserve(pa.size() + pb.size());
    std::size_t i = 0, j = 0;
    while (i < pa.size() || j < pb.size()) {
        const bool take_a = j == pb.size() || (i < pa.size() && pa[i].lo <= pb[j].lo);
        const Interval& p = take_a ? pa[i++] : pb[j++];
        append_merge(out, p.lo, p.hi);
    }
    return IntervalSet::from_canonical(std::move(out));
}

IntervalSet unite_all(std::span<const IntervalSet> sets) {
    std::vector<Interval> raw;
    for (const auto& s : sets) raw.insert(raw.end(), s.parts().begin(), s.parts().end());
    return IntervalSet::normalize(std::move(raw));
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    const IntervalSet& small = a.size() <= b.size() ? a : b;
    const IntervalSet& big = a.size() <= b.size() ? b : a;
    std::vector<Interval> out;
    if (small.size() * 8 < big.size()) {
        for (const auto& p : small.parts()) {
            for (auto it = first_ending_after(big.parts(), p.lo); it != big.parts().end() && it->lo < p.hi; ++it)
                out.push_back(Interval{max(p.lo, it->lo), min(p.hi, it->hi)});
        }
        return IntervalSet::from_canonical(std::move(out));
    }
    const auto& pa = a.parts();
    const auto& pb = b.parts();
    std::size_t i = 0, j = 0;
    while (i < pa.size() && j < pb.size()) {
        const Rational& lo = max(pa[i].lo, pb[j].lo);
        const Rational& hi = min(pa[i].hi, pb[j].hi);
        if (lo < hi) out.push_back(Interval{lo, hi});
        if (pa[i].hi < pb[j].hi)
            ++i;
        else
            ++j;
    }
    return IntervalSet::from_canonical(std::move(out));
}

IntervalSet difference(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    out.reserve(a.size());
    for (const auto& p : a.parts()) {
        Rational cursor = p.lo;
        for (auto it = first_ending_after(b.parts(), p.lo); it != b.parts().end() && it->lo < p.hi; ++it) {
            if (cursor < it->lo) out.push_back(Interval{cursor, it->lo});
            cursor = it->hi;
        }
        if (cursor < p.hi) out.push_back(Interval{std::move(cursor), p.hi});
    }
    return IntervalSet::from_canonical(std::move(out));
}

IntervalSet symmetric_difference(const IntervalSet& a, const IntervalSet& b) {
    return unite(difference(a, b), difference(b, a));
}

IntervalSet complement(const IntervalSet& a) { return difference(IntervalSet::full(), a); }

bool is_subset(const IntervalSet& a, const IntervalSet& b) {
    for (const auto& p : a.parts()) {
        auto it = first_ending_after(b.parts(), p.lo);
        if (it == b.parts().end() || p.lo < it->lo || it->hi < p.hi) return false;
    }
    return true;
}

bool intersects(const IntervalSet& a, const IntervalSet& b) {
    const IntervalSet& small = a.size() <= b.size() ? a : b;
    const IntervalSet& big = a.size() <= b.size() ? b : a;
    for (const auto& p : small.parts()) {
        auto it = first_ending_after(big.parts(), p.lo);
        if (it != big.parts().end() && it->lo < p.hi) return true;
    }
    return false;
}

std::ostream& operator<<(std::ostream& os, const IntervalSet& s) {
    os << '[';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << '[' << s.parts()[i].lo << ',' << s.parts()[i].hi << ')';
    return os << ']';
}

}  // namespace rokhlin
