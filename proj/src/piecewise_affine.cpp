#include "rokhlin/piecewise_affine.hpp"

#include "rokhlin/errors.hpp"

#include <algorithm>

namespace rokhlin {

namespace {

std::vector<AffinePiece> merge_equal_neighbours(std::vector<AffinePiece> pieces) {
    std::vector<AffinePiece> out;
    out.reserve(pieces.size());
    for (auto& p : pieces) {
        if (!out.empty() && out.back().slope == p.slope && out.back().intercept == p.intercept &&
            out.back().domain.hi == p.domain.lo) {
            out.back().domain.hi = std::move(p.domain.hi);
        } else {
            out.push_back(std::move(p));
        }
    }
    return out;
}

// Unmerged pieces of outer o inner, sorted by domain.
std::vector<AffinePiece> compose_raw(const std::vector<AffinePiece>& outer, const std::vector<AffinePiece>& inner,
                                     std::size_t guard) {
    std::vector<AffinePiece> out;
    for (const auto& in : inner) {
        const Interval img = in.image();
        auto it = std::upper_bound(outer.begin(), outer.end(), img.lo,
                                   [](const Rational& v, const AffinePiece& p) { return v < p.domain.hi; });
        const std::size_t first = out.size();
        for (; it != outer.end() && it->domain.lo < img.hi; ++it) {
            const Rational& lo = max(img.lo, it->domain.lo);
            const Rational& hi = min(img.hi, it->domain.hi);
            Rational a = (lo - in.intercept) / in.slope;
            Rational b = (hi - in.intercept) / in.slope;
            if (in.slope.sign() < 0) std::swap(a, b);
            out.push_back(AffinePiece{Interval{std::move(a), std::move(b)}, it->slope * in.slope,
                                      it->slope * in.intercept + it->intercept});
            if (out.size() > guard * 4 + 64)
                throw ComplexityError("composition exceeds branch guard", out.size(), guard);
        }
        if (in.slope.sign() < 0) std::reverse(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
    }
    return out;
}

}  // namespace

Interval AffinePiece::image() const {
    Rational a = at(domain.lo);
    Rational b = at(domain.hi);
    if (b < a) std::swap(a, b);
    return Interval{std::move(a), std::move(b)};
}

PiecewiseAffine::PiecewiseAffine(std::vector<AffinePiece> pieces) {
    if (pieces.empty()) throw DomainError("piecewise-affine function needs at least one piece");
    Rational expected(0);
    for (const auto& p : pieces) {
        if (p.domain.lo != expected)
            throw DomainError("piece domains must partition [0,1): gap or overlap at " + expected.str());
        if (p.domain.empty()) throw DomainError("empty piece domain at " + expected.str());
        expected = p.domain.hi;
    }
    if (expected != Rational(1)) throw DomainError("piece domains end at " + expected.str() + ", not 1");
    pieces_ = merge_equal_neighbours(std::move(pieces));
}

PiecewiseAffine PiecewiseAffine::identity() {
    return PiecewiseAffine({AffinePiece{Interval{0, 1}, Rational(1), Rational(0)}});
}

const AffinePiece& PiecewiseAffine::piece_at(const Rational& x) const {
    if (x.sign() < 0 || x >= Rational(1)) throw DomainError("point " + x.str() + " outside [0,1)");
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                               [](const Rational& v, const AffinePiece& p) { return v < p.domain.hi; });
    return *it;
}

Rational PiecewiseAffine::value_at_one() const { return pieces_.back().at(Rational(1)); }

std::vector<Rational> PiecewiseAffine::breakpoints() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < pieces_.size(); ++i) out.push_back(pieces_[i].domain.lo);
    return out;
}

PiecewiseAffineMap::PiecewiseAffineMap(PiecewiseAffine fn) : fn_(std::move(fn)) {
    for (const auto& b : fn_.pieces()) {
        if (b.slope.is_zero())
            throw DomainError("zero-slope branch on [" + b.domain.lo.str() + ", " + b.domain.hi.str() +
                              ") would create an atom");
        const Rational lo = b.at(b.domain.lo);
        const Rational hi = b.at(b.domain.hi);
        if (min(lo, hi).sign() < 0 || max(lo, hi) > Rational(1))
            throw DomainError("branch on [" + b.domain.lo.str() + ", " + b.domain.hi.str() +
                              ") maps outside [0,1]");
    }
}

PiecewiseAffineMap PiecewiseAffineMap::identity() { return PiecewiseAffineMap(PiecewiseAffine::identity()); }

Rational PiecewiseAffineMap::evaluate(const Rational& x) const {
    Rational y = fn_.value(x);
    if (y == Rational(1)) return Rational(0);
    return y;
}

Cdf::Cdf(PiecewiseAffine fn) : fn_(std::move(fn)) {
    const auto& ps = fn_.pieces();
    if (!ps.front().at(Rational(0)).is_zero()) throw DomainError("distribution function must vanish at 0");
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i].slope.sign() < 0) throw DomainError("distribution function must be nondecreasing");
        if (i > 0 && ps[i - 1].at(ps[i].domain.lo) != ps[i].at(ps[i].domain.lo))
            throw DomainError("distribution function jumps at " + ps[i].domain.lo.str() + " (atom)");
    }
    if (fn_.value_at_one() != Rational(1)) throw DomainError("distribution function must reach 1 at 1");
}

Cdf Cdf::lebesgue() { return Cdf(PiecewiseAffine::identity()); }

Cdf Cdf::from_points(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw DomainError("distribution function needs matching breakpoint/value arrays of length >= 2");
    if (!xs.front().is_zero() || xs.back() != Rational(1))
        throw DomainError("distribution breakpoints must run from 0 to 1");
    std::vector<AffinePiece> pieces;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        if (!(xs[i] < xs[i + 1])) throw DomainError("distribution breakpoints must increase strictly");
        Rational slope = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        Rational intercept = ys[i] - slope * xs[i];
        pieces.push_back(AffinePiece{Interval{xs[i], xs[i + 1]}, std::move(slope), std::move(intercept)});
    }
    return Cdf(PiecewiseAffine(std::move(pieces)));
}

Rational Cdf::operator()(const Rational& x) const {
    if (x == Rational(1)) return Rational(1);
    return fn_.value(x);
}

Rational Cdf::max_density() const {
    Rational best(0);
    for (const auto& p : fn_.pieces()) best = max(best, p.slope);
    return best;
}

bool Cdf::strictly_increasing() const {
    return std::all_of(fn_.pieces().begin(), fn_.pieces().end(),
                       [](const AffinePiece& p) { return p.slope.sign() > 0; });
}

bool Cdf::is_lebesgue() const { return fn_ == PiecewiseAffine::identity(); }

PiecewiseAffine compose(const PiecewiseAffine& outer, const PiecewiseAffineMap& inner, std::size_t guard) {
    PiecewiseAffine result(compose_raw(outer.pieces(), inner.branches(), guard));
    if (result.size() > guard) throw ComplexityError("composition exceeds branch guard", result.size(), guard);
    return result;
}

PiecewiseAffineMap compose(const PiecewiseAffineMap& outer, const PiecewiseAffineMap& inner, std::size_t guard) {
    return PiecewiseAffineMap(compose(outer.function(), inner, guard));
}

PiecewiseAffineMap iterate(const PiecewiseAffineMap& map, int n, std::size_t guard) {
    if (n < 1) throw DomainError("iterate needs n >= 1");
    PiecewiseAffineMap result = map;
    for (int i = 1; i < n; ++i) result = compose(map, result, guard);
    return result;
}

std::vector<Interval> itinerary_cells(const PiecewiseAffineMap& map, int depth, std::size_t guard) {
    if (depth < 1) throw DomainError("itinerary depth must be >= 1");
    // Unmerged raw composition keeps one piece per itinerary.
    std::vector<AffinePiece> raw = map.branches();
    for (int d = 1; d < depth; ++d) {
        raw = compose_raw(map.branches(), raw, guard);
        if (raw.size() > guard) throw ComplexityError("itinerary partition exceeds branch guard", raw.size(), guard);
    }
    std::vector<Interval> cells;
    cells.reserve(raw.size());
    for (auto& p : raw) cells.push_back(std::move(p.domain));
    return cells;
}

}  // namespace rokhlin
