#ifndef ROKHLIN_TESTS_SUPPORT_HPP
#define ROKHLIN_TESTS_SUPPORT_HPP

#include "rokhlin/interval_set.hpp"
#include "rokhlin/piecewise_affine.hpp"
#include "rokhlin/rational.hpp"

#include <initializer_list>
#include <random>
#include <string>
#include <utility>

namespace testing {

using namespace rokhlin;

inline Rational q(const char* s) { return Rational::parse(s); }

inline IntervalSet set(std::initializer_list<std::pair<const char*, const char*>> parts) {
    std::vector<Interval> raw;
    for (const auto& [lo, hi] : parts) raw.emplace_back(q(lo), q(hi));
    return IntervalSet::normalize(std::move(raw));
}

// Endpoints on the grid k/den; small denominators make coincidences
// (touching, nesting, equal endpoints) frequent.
inline IntervalSet random_set(std::mt19937& rng, long den = 24, int max_parts = 5) {
    std::uniform_int_distribution<long> pos(0, den);
    std::uniform_int_distribution<int> count(0, max_parts);
    std::vector<Interval> raw;
    for (int n = count(rng); n > 0; --n) {
        long a = pos(rng), b = pos(rng);
        if (a > b) std::swap(a, b);
        raw.emplace_back(Rational(a, den), Rational(b, den));
    }
    return IntervalSet::normalize(std::move(raw));
}

inline Rational random_point(std::mt19937& rng, long den = 97) {
    std::uniform_int_distribution<long> pos(0, den - 1);
    return Rational(pos(rng), den);
}

// Strictly increasing continuous CDF through random breakpoints.
inline Cdf random_cdf(std::mt19937& rng, int pieces = 3) {
    std::uniform_int_distribution<long> w(1, 9);
    std::vector<Rational> xs{Rational(0)}, ys{Rational(0)};
    long xt = 0, yt = 0;
    std::vector<long> dx, dy;
    for (int i = 0; i < pieces; ++i) {
        dx.push_back(w(rng));
        dy.push_back(w(rng));
        xt += dx.back();
        yt += dy.back();
    }
    long xa = 0, ya = 0;
    for (int i = 0; i < pieces; ++i) {
        xa += dx[i];
        ya += dy[i];
        xs.emplace_back(xa, xt);
        ys.emplace_back(ya, yt);
    }
    return Cdf::from_points(xs, ys);
}

// Every branch maps its domain onto [0,1), increasing or decreasing at
// random. Such maps preserve Lebesgue measure since the reciprocal slopes
// sum to 1.
inline PiecewiseAffineMap random_full_branch_map(std::mt19937& rng, int branches = 3) {
    std::uniform_int_distribution<long> w(1, 5);
    std::bernoulli_distribution flip(0.4);
    std::vector<long> len;
    long total = 0;
    for (int i = 0; i < branches; ++i) total += len.emplace_back(w(rng));
    std::vector<AffinePiece> pieces;
    long at = 0;
    for (int i = 0; i < branches; ++i) {
        const Rational lo(at, total), hi(at + len[i], total);
        const Rational slope = Rational(total, len[i]);
        if (flip(rng))
            pieces.push_back(AffinePiece{Interval{lo, hi}, -slope, slope * hi});
        else
            pieces.push_back(AffinePiece{Interval{lo, hi}, slope, -slope * lo});
        at += len[i];
    }
    return PiecewiseAffineMap(std::move(pieces));
}

// Points where pointwise membership in a preimage may disagree with the
// canonical set: branch endpoints and points mapped onto an endpoint of `a`.
inline bool on_boundary(const PiecewiseAffineMap& map, const IntervalSet& a, const Rational& x) {
    for (const auto& b : map.branches())
        if (b.domain.lo == x || b.domain.hi == x) return true;
    const Rational y = map.evaluate(x);
    for (const auto& p : a.parts())
        if (p.lo == y || p.hi == y) return true;
    return false;
}

}  // namespace testing

#endif  // ROKHLIN_TESTS_SUPPORT_HPP
