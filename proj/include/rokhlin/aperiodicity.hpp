#ifndef ROKHLIN_APERIODICITY_HPP
#define ROKHLIN_APERIODICITY_HPP

#include "rokhlin/dynamics.hpp"

#include <cstddef>
#include <vector>

namespace rokhlin {

/// mu{x : F(T^n x) = F(x)}, the n-step nigh-aperiodicity defect.
struct DefectReport {
    int n = 0;
    Rational defect;
    /// Union of the refinement pieces on which F o T^n and F coincide.
    IntervalSet equality_set;
    /// Pieces where the two affine formulas cross at a single point; these
    /// contribute nothing to the defect.
    std::size_t isolated_matches = 0;

    bool nigh_aperiodic() const { return defect.is_zero(); }
};

DefectReport nigh_aperiodicity_defect(const SystemSpec& sys, int n, std::size_t guard = kDefaultBranchGuard);

/// Same, with T^n already computed by the caller.
DefectReport defect_of_power(const SystemSpec& sys, const PiecewiseAffineMap& power, int n,
                             std::size_t guard = kDefaultBranchGuard);

/// Defect reports for n = 1..horizon. Certifies nigh aperiodicity only up
/// to the horizon. A ComplexityError names the first n that overflowed.
std::vector<DefectReport> is_nigh_aperiodic_up_to(const SystemSpec& sys, int horizon,
                                                  std::size_t guard = kDefaultBranchGuard);

}  // namespace rokhlin

#endif  // ROKHLIN_APERIODICITY_HPP
