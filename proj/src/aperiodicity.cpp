#include "rokhlin/aperiodicity.hpp"

#include "rokhlin/errors.hpp"
#include "rokhlin/measure.hpp"

namespace rokhlin {

DefectReport defect_of_power(const SystemSpec& sys, const PiecewiseAffineMap& iterate_n, int n,
                             std::size_t guard) {
    const PiecewiseAffine g = compose(sys.cdf.function(), iterate_n, guard);
    const auto& gp = g.pieces();
    const auto& fp = sys.cdf.function().pieces();

    DefectReport report;
    report.n = n;
    std::vector<Interval> equal;
    std::size_t i = 0, j = 0;
    while (i < gp.size() && j < fp.size()) {
        const Rational& lo = max(gp[i].domain.lo, fp[j].domain.lo);
        const Rational& hi = min(gp[i].domain.hi, fp[j].domain.hi);
        if (lo < hi) {
            if (gp[i].slope == fp[j].slope) {
                if (gp[i].intercept == fp[j].intercept) equal.push_back(Interval{lo, hi});
            } else {
                const Rational x = (fp[j].intercept - gp[i].intercept) / (gp[i].slope - fp[j].slope);
                if (lo <= x && x < hi) ++report.isolated_matches;
            }
        }
        if (gp[i].domain.hi < fp[j].domain.hi)
            ++i;
        else
            ++j;
    }
    report.equality_set = IntervalSet::normalize(std::move(equal));
    report.defect = measure(report.equality_set, sys.cdf);
    return report;
}

DefectReport nigh_aperiodicity_defect(const SystemSpec& sys, int n, std::size_t guard) {
    if (n < 1) throw DomainError("defect needs n >= 1");
    return defect_of_power(sys, iterate(sys.map, n, guard), n, guard);
}

std::vector<DefectReport> is_nigh_aperiodic_up_to(const SystemSpec& sys, int horizon, std::size_t guard) {
    if (horizon < 1) throw DomainError("aperiodicity horizon must be >= 1");
    std::vector<DefectReport> reports;
    PiecewiseAffineMap power = sys.map;
    for (int n = 1; n <= horizon; ++n) {
        try {
            if (n > 1) power = compose(sys.map, power, guard);
            reports.push_back(defect_of_power(sys, power, n, guard));
        } catch (const ComplexityError& e) {
            throw ComplexityError("nigh-aperiodicity defect at n=" + std::to_string(n) + ": " + e.what(), e.size(),
                                  e.limit());
        }
    }
    return reports;
}

}  // namespace rokhlin
