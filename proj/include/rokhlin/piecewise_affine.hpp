#ifndef ROKHLIN_PIECEWISE_AFFINE_HPP
#define ROKHLIN_PIECEWISE_AFFINE_HPP

#include "rokhlin/interval_set.hpp"
#include "rokhlin/rational.hpp"

#include <cstddef>
#include <vector>

namespace rokhlin {

/// Default cap on the number of pieces an exact composition may produce.
inline constexpr std::size_t kDefaultBranchGuard = 4096;

/// x -> slope * x + intercept on a half-open domain.
struct AffinePiece {
    Interval domain;
    Rational slope;
    Rational intercept;

    Rational at(const Rational& x) const { return slope * x + intercept; }
    /// Image of the domain, re-canonicalized as [c, d). Decreasing pieces
    /// send [a, b) onto (c, d]; the two differ by a null set.
    Interval image() const;

    friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// Piecewise-affine function on [0, 1): pieces partition [0, 1) exactly,
/// in increasing order. Adjacent pieces with the same formula are merged.
class PiecewiseAffine {
public:
    /// Throws DomainError if the domains are not a contiguous partition.
    explicit PiecewiseAffine(std::vector<AffinePiece> pieces);

    static PiecewiseAffine identity();

    const std::vector<AffinePiece>& pieces() const { return pieces_; }
    std::size_t size() const { return pieces_.size(); }

    /// Piece whose domain contains x. Throws DomainError for x outside [0,1).
    const AffinePiece& piece_at(const Rational& x) const;
    Rational value(const Rational& x) const { return piece_at(x).at(x); }
    /// Left limit at 1 of the last piece.
    Rational value_at_one() const;
    /// Interior breakpoints, increasing.
    std::vector<Rational> breakpoints() const;

    friend bool operator==(const PiecewiseAffine&, const PiecewiseAffine&) = default;

private:
    std::vector<AffinePiece> pieces_;
};

/// Piecewise-affine endomorphism of [0, 1): every branch is injective
/// (nonzero slope) and maps its domain into [0, 1].
class PiecewiseAffineMap {
public:
    explicit PiecewiseAffineMap(PiecewiseAffine fn);
    explicit PiecewiseAffineMap(std::vector<AffinePiece> branches)
        : PiecewiseAffineMap(PiecewiseAffine(std::move(branches))) {}

    static PiecewiseAffineMap identity();

    const PiecewiseAffine& function() const { return fn_; }
    const std::vector<AffinePiece>& branches() const { return fn_.pieces(); }
    std::size_t size() const { return fn_.size(); }

    /// Image of x. A value of exactly 1 (reachable only at the left end of a
    /// decreasing branch) is folded to 0, since 1 is not a point of [0, 1).
    Rational evaluate(const Rational& x) const;

    friend bool operator==(const PiecewiseAffineMap&, const PiecewiseAffineMap&) = default;

private:
    PiecewiseAffine fn_;
};

/// Continuous nondecreasing piecewise-affine distribution function with
/// F(0) = 0 and F(1) = 1. Continuity rules out atoms.
class Cdf {
public:
    explicit Cdf(PiecewiseAffine fn);

    static Cdf lebesgue();
    /// Linear interpolation through (breakpoints[i], values[i]). Breakpoints
    /// must start at 0, end at 1 and increase strictly.
    static Cdf from_points(const std::vector<Rational>& breakpoints, const std::vector<Rational>& values);

    const PiecewiseAffine& function() const { return fn_; }
    /// F(x) for x in [0, 1].
    Rational operator()(const Rational& x) const;
    /// Density on the piece containing x in [0, 1).
    const Rational& density(const Rational& x) const { return fn_.piece_at(x).slope; }
    Rational max_density() const;
    bool strictly_increasing() const;
    bool is_lebesgue() const;

    friend bool operator==(const Cdf&, const Cdf&) = default;

private:
    PiecewiseAffine fn_;
};

/// outer o inner as an exact piecewise-affine function. Throws
/// ComplexityError when the result has more than `guard` pieces.
PiecewiseAffine compose(const PiecewiseAffine& outer, const PiecewiseAffineMap& inner,
                        std::size_t guard = kDefaultBranchGuard);
PiecewiseAffineMap compose(const PiecewiseAffineMap& outer, const PiecewiseAffineMap& inner,
                           std::size_t guard = kDefaultBranchGuard);
/// n-fold composition, n >= 1.
PiecewiseAffineMap iterate(const PiecewiseAffineMap& map, int n, std::size_t guard = kDefaultBranchGuard);

/// Atoms of the join of T^{-j}(branch partition), j < depth: the maximal
/// intervals on which the first `depth` branch indices are constant.
std::vector<Interval> itinerary_cells(const PiecewiseAffineMap& map, int depth,
                                      std::size_t guard = kDefaultBranchGuard);

}  // namespace rokhlin

#endif  // ROKHLIN_PIECEWISE_AFFINE_HPP
