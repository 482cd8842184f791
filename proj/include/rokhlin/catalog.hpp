#ifndef ROKHLIN_CATALOG_HPP
#define ROKHLIN_CATALOG_HPP

#include "rokhlin/dynamics.hpp"

namespace rokhlin::catalog {

// Standard systems, all with Lebesgue measure unless stated.

SystemSpec doubling();       // 2x mod 1
SystemSpec tent();           // 2x, 2 - 2x
SystemSpec times3();         // 3x mod 1
SystemSpec half_rotation();  // x + 1/2 mod 1
SystemSpec identity();

/// Four slope-3 branches whose images overlap on [0,1/2): pushes mass
/// 4x/3 onto [0,x) for small x, so Lebesgue is not preserved.
SystemSpec broken_slope3();

/// Doubling conjugated by F(x) = x/2 on [0,1/2), 3x/2 - 1/2 on [1/2,1),
/// with that F as distribution function.
SystemSpec skewed_doubling();

}  // namespace rokhlin::catalog

#endif  // ROKHLIN_CATALOG_HPP
