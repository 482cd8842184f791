#include "rokhlin/conjugation.hpp"

#include "rokhlin/errors.hpp"

namespace rokhlin {

PiecewiseAffineMap invert_increasing(const PiecewiseAffineMap& f) {
    std::vector<AffinePiece> inv;
    Rational expected(0);
    for (const auto& p : f.branches()) {
        if (p.slope.sign() <= 0) throw DomainError("map is not increasing on " + p.domain.lo.str() + ".." + p.domain.hi.str());
        const Rational lo = p.at(p.domain.lo);
        const Rational hi = p.at(p.domain.hi);
        if (lo != expected) throw DomainError("map is not continuous onto [0,1) at " + p.domain.lo.str());
        const Rational slope = Rational(1) / p.slope;
        inv.push_back(AffinePiece{Interval{lo, hi}, slope, -p.intercept * slope});
        expected = hi;
    }
    if (expected != Rational(1)) throw DomainError("map does not reach 1");
    return PiecewiseAffineMap(std::move(inv));
}

ConjugacyPair normalize_to_lebesgue(const SystemSpec& sys, std::size_t guard) {
    if (!sys.cdf.strictly_increasing())
        throw NotInvertibleError("distribution function has a flat piece; plateaus are not quotiented");
    PiecewiseAffineMap forward(sys.cdf.function());
    PiecewiseAffineMap inverse = invert_increasing(forward);
    PiecewiseAffineMap map = compose(forward, compose(sys.map, inverse, guard), guard);
    ConjugacyPair pair{std::move(forward), std::move(inverse), sys, SystemSpec{Cdf::lebesgue(), std::move(map)}, {}};
    pair.preservation = verify_measure_preservation(pair.normalized);
    return pair;
}

IntervalSet to_original(const ConjugacyPair& pair, const IntervalSet& a) { return preimage(pair.forward, a); }

IntervalSet to_normalized(const ConjugacyPair& pair, const IntervalSet& a) { return preimage(pair.inverse, a); }

}  // namespace rokhlin
