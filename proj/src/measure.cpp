#include "rokhlin/measure.hpp"

#include "rokhlin/errors.hpp"

namespace rokhlin {

Rational measure(const IntervalSet& a, const Cdf& cdf) {
    if (cdf.is_lebesgue()) return a.length();
    mpq_class total;
    for (const auto& p : a.parts()) total += cdf(p.hi).raw() - cdf(p.lo).raw();
    return Rational(std::move(total));
}

Rational conditional_measure(const IntervalSet& a, const IntervalSet& u, const Cdf& cdf) {
    const Rational mu_u = measure(u, cdf);
    if (mu_u.is_zero()) throw UndefinedConditionalError("conditioning set has measure zero");
    return measure(intersect(a, u), cdf) / mu_u;
}

}  // namespace rokhlin
