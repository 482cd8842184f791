#include "rokhlin/dynamics.hpp"

#include "rokhlin/errors.hpp"
#include "rokhlin/measure.hpp"

#include <algorithm>

namespace rokhlin {

namespace {

// Pull [lo, hi) (inside the branch image) back through one branch.
Interval pull_back(const AffinePiece& branch, const Rational& lo, const Rational& hi) {
    Rational a = (lo - branch.intercept) / branch.slope;
    Rational b = (hi - branch.intercept) / branch.slope;
    if (branch.slope.sign() < 0) std::swap(a, b);
    return Interval{std::move(a), std::move(b)};
}

// mu{y in branch domain : T(y) < x}
Rational mass_below(const AffinePiece& branch, const Rational& x, const Cdf& cdf) {
    const Rational cut = (x - branch.intercept) / branch.slope;
    if (branch.slope.sign() > 0) {
        const Rational& c = min(branch.domain.hi, max(branch.domain.lo, cut));
        return cdf(c) - cdf(branch.domain.lo);
    }
    const Rational& c = max(branch.domain.lo, min(branch.domain.hi, cut));
    return cdf(branch.domain.hi) - cdf(c);
}

}  // namespace

IntervalSet preimage(const PiecewiseAffineMap& map, const IntervalSet& a) {
    const auto& parts = a.parts();
    std::vector<Interval> out;
    for (const auto& branch : map.branches()) {
        const Interval img = branch.image();
        auto it = std::upper_bound(parts.begin(), parts.end(), img.lo,
                                   [](const Rational& v, const Interval& p) { return v < p.hi; });
        const std::size_t first = out.size();
        for (; it != parts.end() && it->lo < img.hi; ++it)
            out.push_back(pull_back(branch, max(img.lo, it->lo), min(img.hi, it->hi)));
        if (branch.slope.sign() < 0) std::reverse(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
    }
    // Branch domains are ordered, so `out` is sorted; only touching parts
    // across branch boundaries remain to be merged.
    std::vector<Interval> merged;
    merged.reserve(out.size());
    for (auto& p : out) {
        if (p.empty()) continue;
        if (!merged.empty() && p.lo <= merged.back().hi)
            merged.back().hi = std::move(p.hi);
        else
            merged.push_back(std::move(p));
    }
    return IntervalSet::from_canonical(std::move(merged));
}

IntervalSet iterated_preimage(const PiecewiseAffineMap& map, const IntervalSet& a, int j) {
    if (j < 0) throw DomainError("iterated_preimage needs j >= 0");
    IntervalSet result = a;
    for (int i = 0; i < j; ++i) result = preimage(map, result);
    return result;
}

PreservationReport verify_measure_preservation(const SystemSpec& sys) {
    std::vector<Rational> points{Rational(0), Rational(1)};
    const std::vector<Rational> cdf_breaks = sys.cdf.function().breakpoints();
    points.insert(points.end(), cdf_breaks.begin(), cdf_breaks.end());
    for (const auto& branch : sys.map.branches()) {
        points.push_back(branch.at(branch.domain.lo));
        points.push_back(branch.at(branch.domain.hi));
        for (const auto& c : cdf_breaks)
            if (branch.domain.contains(c)) points.push_back(branch.at(c));
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    const std::size_t n = points.size();
    for (std::size_t i = 0; i + 1 < n; ++i) points.push_back((points[i] + points[i + 1]) / Rational(2));

    PreservationReport report;
    report.max_discrepancy = Rational(0);
    for (const auto& x : points) {
        Rational pulled(0);
        for (const auto& branch : sys.map.branches()) pulled += mass_below(branch, x, sys.cdf);
        Rational gap = abs(pulled - sys.cdf(x));
        if (gap > report.max_discrepancy) {
            report.max_discrepancy = std::move(gap);
            report.witness = x;
        }
    }
    report.points_checked = points.size();
    report.preserved = report.max_discrepancy.is_zero();
    return report;
}

bool check_surjectivity(const PiecewiseAffineMap& map) {
    std::vector<Interval> images;
    for (const auto& branch : map.branches()) images.push_back(branch.image());
    return IntervalSet::normalize(std::move(images)) == IntervalSet::full();
}

}  // namespace rokhlin
