#ifndef ROKHLIN_CONJUGATION_HPP
#define ROKHLIN_CONJUGATION_HPP

#include "rokhlin/dynamics.hpp"

namespace rokhlin {

/// (X, mu, T) and its image under x -> F_mu(x), which carries mu to
/// Lebesgue measure.
struct ConjugacyPair {
    PiecewiseAffineMap forward;
    PiecewiseAffineMap inverse;
    SystemSpec original;
    SystemSpec normalized;
    /// Lebesgue preservation of the normalized map, checked after construction.
    PreservationReport preservation;
};

/// Exact inverse of a continuous strictly increasing map onto [0,1).
/// Throws DomainError otherwise.
PiecewiseAffineMap invert_increasing(const PiecewiseAffineMap& f);

/// normalized.map = F o T o F^{-1}. Throws NotInvertibleError if the CDF
/// has a flat piece.
ConjugacyPair normalize_to_lebesgue(const SystemSpec& sys, std::size_t guard = kDefaultBranchGuard);

/// F^{-1}(a) = {x : F(x) in a}: moves a set of the normalized system back
/// to the original one.
IntervalSet to_original(const ConjugacyPair& pair, const IntervalSet& a);
/// F(a), the inverse operation.
IntervalSet to_normalized(const ConjugacyPair& pair, const IntervalSet& a);

}  // namespace rokhlin

#endif  // ROKHLIN_CONJUGATION_HPP
