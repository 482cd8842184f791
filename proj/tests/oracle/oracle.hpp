#ifndef ROKHLIN_TESTS_ORACLE_HPP
#define ROKHLIN_TESTS_ORACLE_HPP

// Brute-force cross-checks on the midpoint grid x_i = (2i+1)/(2M).
// Shares only the data types and evaluate() with the library; every set
// operation is replaced by pointwise membership along exact orbits.

#include "rokhlin/dynamics.hpp"

#include <optional>

namespace oracle {

using rokhlin::Cdf;
using rokhlin::IntervalSet;
using rokhlin::Rational;
using rokhlin::SystemSpec;

struct Estimate {
    double value = 0;
    /// |value - exact| <= bound is guaranteed.
    double bound = 0;
};

Rational grid_point(long i, long m);

/// Midpoint rule for the density times the indicator of `a`. Only grid cells
/// containing an endpoint of `a` or a CDF breakpoint can be off, each by at
/// most max_density / M.
Estimate grid_measure(const IntervalSet& a, const Cdf& cdf, long m);

/// Least k <= K with T^k x in F, by exact orbit computation.
std::optional<int> grid_entrance_time(const SystemSpec& sys, const IntervalSet& f, const Rational& x, int k);

/// True if the orbit x, Tx, ..., T^K x avoids every branch endpoint and
/// every endpoint of F, so that set membership along it is unambiguous.
bool non_boundary(const SystemSpec& sys, const IntervalSet& f, const Rational& x, int k);

/// Grid estimate of mu{x : F(T^n x) = F(x)}. `breaks` is the number of
/// pieces where the estimate can be off (endpoints of the equality set,
/// isolated solutions and breakpoints of both sides); the caller supplies it
/// from the exact structure it wants to check against.
Estimate grid_defect(const SystemSpec& sys, int n, long m, std::size_t breaks);

}  // namespace oracle

#endif  // ROKHLIN_TESTS_ORACLE_HPP
