#include "rokhlin/catalog.hpp"

namespace rokhlin::catalog {

namespace {

struct B {
    Rational lo, hi, slope, intercept;
};

SystemSpec lebesgue_system(std::initializer_list<B> branches) {
    std::vector<AffinePiece> pieces;
    for (const auto& b : branches) pieces.push_back(AffinePiece{Interval{b.lo, b.hi}, b.slope, b.intercept});
    return SystemSpec{Cdf::lebesgue(), PiecewiseAffineMap(std::move(pieces))};
}

Rational q(long p, long d = 1) { return Rational(p, d); }

}  // namespace

SystemSpec doubling() { return lebesgue_system({{q(0), q(1, 2), q(2), q(0)}, {q(1, 2), q(1), q(2), q(-1)}}); }

SystemSpec tent() { return lebesgue_system({{q(0), q(1, 2), q(2), q(0)}, {q(1, 2), q(1), q(-2), q(2)}}); }

SystemSpec times3() {
    return lebesgue_system(
        {{q(0), q(1, 3), q(3), q(0)}, {q(1, 3), q(2, 3), q(3), q(-1)}, {q(2, 3), q(1), q(3), q(-2)}});
}

SystemSpec half_rotation() {
    return lebesgue_system({{q(0), q(1, 2), q(1), q(1, 2)}, {q(1, 2), q(1), q(1), q(-1, 2)}});
}

SystemSpec identity() { return SystemSpec{Cdf::lebesgue(), PiecewiseAffineMap::identity()}; }

SystemSpec broken_slope3() {
    return lebesgue_system({{q(0), q(1, 3), q(3), q(0)},
                            {q(1, 3), q(1, 2), q(3), q(-1)},
                            {q(1, 2), q(5, 6), q(3), q(-3, 2)},
                            {q(5, 6), q(1), q(3), q(-5, 2)}});
}

SystemSpec skewed_doubling() {
    SystemSpec s = lebesgue_system({{q(0), q(1, 4), q(2), q(0)},
                                    {q(1, 4), q(1, 2), q(2, 3), q(1, 3)},
                                    {q(1, 2), q(2, 3), q(2), q(-1, 3)},
                                    {q(2, 3), q(3, 4), q(6), q(-4)},
                                    {q(3, 4), q(1), q(2), q(-1)}});
    s.cdf = Cdf::from_points({q(0), q(1, 2), q(1)}, {q(0), q(1, 4), q(1)});
    return s;
}

}  // namespace rokhlin::catalog
