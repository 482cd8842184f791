#ifndef ROKHLIN_DYNAMICS_HPP
#define ROKHLIN_DYNAMICS_HPP

#include "rokhlin/interval_set.hpp"
#include "rokhlin/piecewise_affine.hpp"
#include "rokhlin/rational.hpp"

#include <cstddef>
#include <optional>

namespace rokhlin {

/// A measure (as its distribution function) together with a map of [0,1).
struct SystemSpec {
    Cdf cdf;
    PiecewiseAffineMap map;

    friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

/// T^{-1}(a), computed branch by branch. Agrees with {x : T(x) in a} up to
/// finitely many branch endpoints.
IntervalSet preimage(const PiecewiseAffineMap& map, const IntervalSet& a);

/// T^{-j}(a); j = 0 returns a.
IntervalSet iterated_preimage(const PiecewiseAffineMap& map, const IntervalSet& a, int j);

struct PreservationReport {
    bool preserved = false;
    /// max over x of |mu(T^{-1}[0,x)) - F(x)|
    Rational max_discrepancy;
    /// Point attaining the maximum, present when preservation fails.
    std::optional<Rational> witness;
    std::size_t points_checked = 0;
};

/// Decides mu(T^{-1}[0,x)) = F(x) for all x exactly. Both sides are
/// continuous and piecewise affine in x, so comparing them at the merged
/// breakpoints and midpoints between them settles the identity.
PreservationReport verify_measure_preservation(const SystemSpec& sys);

/// True iff the branch images cover [0,1) up to finitely many points.
bool check_surjectivity(const PiecewiseAffineMap& map);

}  // namespace rokhlin

#endif  // ROKHLIN_DYNAMICS_HPP
