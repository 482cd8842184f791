#ifndef ROKHLIN_MEASURE_HPP
#define ROKHLIN_MEASURE_HPP

#include "rokhlin/interval_set.hpp"
#include "rokhlin/piecewise_affine.hpp"
#include "rokhlin/rational.hpp"

namespace rokhlin {

/// Exact measure of `a` under the distribution F: the sum over parts of
/// F(hi) - F(lo). For a single part this is |F(b) - F(a)|.
Rational measure(const IntervalSet& a, const Cdf& cdf);

/// mu(a & u) / mu(u). Throws UndefinedConditionalError if mu(u) = 0.
Rational conditional_measure(const IntervalSet& a, const IntervalSet& u, const Cdf& cdf);

}  // namespace rokhlin

#endif  // ROKHLIN_MEASURE_HPP
