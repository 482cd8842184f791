#ifndef ROKHLIN_CHAIN_SEARCH_HPP
#define ROKHLIN_CHAIN_SEARCH_HPP

#include "rokhlin/dynamics.hpp"

#include <string>
#include <vector>

namespace rokhlin {

/// Exact certificate that `base` induces an m-chain:
/// mu(base) > 0 and mu(base & T^{-j} base) = 0 for j = 1..m-1.
struct ChainCertificate {
    IntervalSet base;
    int length = 1;
    Rational base_measure;
    /// intersection_measures[j-1] = mu(base & T^{-j} base)
    std::vector<Rational> intersection_measures;
    /// Refinement level the base was found at (0 when no search ran).
    int search_depth = 0;
    /// How the first candidate was produced: "given", "whole", "order-minimum" or "cell".
    std::string origin = "given";

    bool valid() const;
};

/// Pure certification; no search.
ChainCertificate verify_chain(const SystemSpec& sys, const IntervalSet& base, int m);

/// The set of x whose orbit segment x, Tx, ..., T^{2m-2}x attains its
/// strict F-minimum at step m-1. It is an m-chain by construction: if both
/// x and T^j x (0 < j < m) were in it, step m-1+j would have to be both
/// above and below step m-1. Throws ComplexityError if T^{2m-2} exceeds the
/// guard.
IntervalSet order_minimum_set(const SystemSpec& sys, int m, std::size_t guard = kDefaultBranchGuard);

struct ChainSearchOptions {
    std::size_t guard = kDefaultBranchGuard;
    /// Try the order-minimum construction before scanning cells.
    bool order_seed = true;
    /// Size guard for that construction alone: it needs F o T^i for
    /// i <= 2m-2 once, which is cheaper than the repeated iterates the
    /// main guard protects.
    std::size_t seed_guard = std::size_t{1} << 15;
};

/// Finds an m-chain inside `within`: first the order-minimum set, then
/// itinerary cells of increasing depth (up to `depth`) scanned by left
/// endpoint. The first valid candidate is then enlarged greedily by the
/// depth-`depth` cells that keep the chain property, each addition checked
/// exactly. Throws ChainNotFoundError when nothing qualifies.
ChainCertificate find_chain(const SystemSpec& sys, int m, const IntervalSet& within, int depth,
                            const ChainSearchOptions& options = {});

/// Adds to `cert.base` every piece of (depth-`depth` cell & within) that
/// keeps the chain property, scanning by left endpoint. Returns the number
/// of pieces added.
std::size_t grow_chain(const SystemSpec& sys, ChainCertificate& cert, const IntervalSet& within, int depth,
                       std::size_t guard = kDefaultBranchGuard);

}  // namespace rokhlin

#endif  // ROKHLIN_CHAIN_SEARCH_HPP
