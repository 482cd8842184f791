#include "rokhlin/chain_search.hpp"

#include "rokhlin/errors.hpp"
#include "rokhlin/measure.hpp"

#include <algorithm>
#include <optional>

namespace rokhlin {

namespace {

// mu(a & b) = 0. Positive-length overlaps are null only on CDF plateaus.
bool null_meet(const IntervalSet& a, const IntervalSet& b, const Cdf& cdf, bool strict) {
    if (!intersects(a, b)) return true;
    if (strict) return false;
    return measure(intersect(a, b), cdf).is_zero();
}

// Chain test with early exit; verify_chain computes every entry.
bool is_chain(const SystemSpec& sys, const IntervalSet& base, int m, bool strict) {
    if (measure(base, sys.cdf).is_zero()) return false;
    IntervalSet pulled = base;
    for (int j = 1; j < m; ++j) {
        pulled = preimage(sys.map, pulled);
        if (!null_meet(base, pulled, sys.cdf, strict)) return false;
    }
    return true;
}

// Deepest itinerary partition up to `depth` that fits the guard.
std::pair<std::vector<Interval>, int> deepest_cells(const PiecewiseAffineMap& map, int depth, std::size_t guard) {
    for (int d = depth; d >= 1; --d) {
        try {
            return {itinerary_cells(map, d, guard), d};
        } catch (const ComplexityError&) {
        }
    }
    return {{}, 0};
}

}  // namespace

bool ChainCertificate::valid() const {
    if (base_measure.sign() <= 0) return false;
    return std::all_of(intersection_measures.begin(), intersection_measures.end(),
                       [](const Rational& r) { return r.is_zero(); });
}

ChainCertificate verify_chain(const SystemSpec& sys, const IntervalSet& base, int m) {
    if (m < 1) throw DomainError("chain length must be >= 1");
    ChainCertificate cert;
    cert.base = base;
    cert.length = m;
    cert.base_measure = measure(base, sys.cdf);
    IntervalSet pulled = base;
    for (int j = 1; j < m; ++j) {
        pulled = preimage(sys.map, pulled);
        cert.intersection_measures.push_back(measure(intersect(base, pulled), sys.cdf));
    }
    return cert;
}

IntervalSet order_minimum_set(const SystemSpec& sys, int m, std::size_t guard) {
    if (m < 1) throw DomainError("chain length must be >= 1");
    if (m == 1) return IntervalSet::full();
    const int window = 2 * m - 2;
    const int centre = m - 1;

    // g[i] = F o T^i
    std::vector<PiecewiseAffine> g{sys.cdf.function()};
    PiecewiseAffineMap power = sys.map;
    for (int i = 1; i <= window; ++i) {
        g.push_back(compose(sys.cdf.function(), power, guard));
        if (i < window) power = compose(sys.map, power, guard);
    }

    std::vector<Rational> cuts{Rational(0), Rational(1)};
    for (const auto& f : g) {
        auto b = f.breakpoints();
        cuts.insert(cuts.end(), b.begin(), b.end());
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Interval> out;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const Rational mid = (cuts[k] + cuts[k + 1]) / Rational(2);
        const AffinePiece& c = g[centre].piece_at(mid);
        Rational lo = cuts[k], hi = cuts[k + 1];
        bool empty = false;
        for (int i = 0; i <= window && !empty; ++i) {
            if (i == centre) continue;
            const AffinePiece& p = g[i].piece_at(mid);
            // c(x) < p(x)  <=>  (c.slope - p.slope) x < p.intercept - c.intercept
            const Rational ds = c.slope - p.slope;
            const Rational dt = p.intercept - c.intercept;
            if (ds.is_zero()) {
                empty = dt.sign() <= 0;
            } else {
                const Rational x = dt / ds;
                if (ds.sign() > 0) {
                    if (x < hi) hi = x;
                } else if (x > lo) {
                    lo = x;
                }
                empty = !(lo < hi);
            }
        }
        if (!empty) out.emplace_back(lo, hi);
    }
    return IntervalSet::normalize(std::move(out));
}

std::size_t grow_chain(const SystemSpec& sys, ChainCertificate& cert, const IntervalSet& within, int depth,
                       std::size_t guard) {
    const int m = cert.length;
    const bool strict = sys.cdf.strictly_increasing();
    if (m == 1) {
        const IntervalSet extra = difference(within, cert.base);
        if (measure(extra, sys.cdf).is_zero()) return 0;
        cert = verify_chain(sys, unite(cert.base, extra), 1);
        return extra.size();
    }

    const auto [cells, level] = deepest_cells(sys.map, depth, guard);
    IntervalSet base = cert.base;
    std::vector<IntervalSet> pulls(static_cast<std::size_t>(m));
    pulls[0] = base;
    for (int j = 1; j < m; ++j) pulls[j] = preimage(sys.map, pulls[j - 1]);

    std::size_t added = 0;
    std::vector<IntervalSet> cand(static_cast<std::size_t>(m));
    for (const auto& cell : cells) {
        IntervalSet piece = difference(intersect(IntervalSet::interval(cell.lo, cell.hi), within), base);
        if (piece.empty() || measure(piece, sys.cdf).is_zero()) continue;
        cand[0] = piece;
        bool ok = true;
        for (int j = 1; j < m && ok; ++j) {
            if (!null_meet(piece, pulls[j], sys.cdf, strict)) {
                ok = false;
                break;
            }
            cand[j] = preimage(sys.map, cand[j - 1]);
            ok = null_meet(base, cand[j], sys.cdf, strict) && null_meet(piece, cand[j], sys.cdf, strict);
        }
        if (!ok) continue;
        base = unite(base, piece);
        for (int j = 0; j < m; ++j) pulls[j] = unite(pulls[j], cand[j]);
        ++added;
    }
    if (added > 0) {
        ChainCertificate next = verify_chain(sys, base, m);
        next.search_depth = std::max(cert.search_depth, level);
        next.origin = cert.origin;
        cert = std::move(next);
    }
    return added;
}

ChainCertificate find_chain(const SystemSpec& sys, int m, const IntervalSet& within, int depth,
                            const ChainSearchOptions& options) {
    if (m < 1) throw DomainError("chain length must be >= 1");
    if (depth < 1) throw DomainError("search depth must be >= 1");
    if (measure(within, sys.cdf).is_zero()) throw DomainError("chain search region has measure zero");

    if (m == 1) {
        ChainCertificate cert = verify_chain(sys, within, 1);
        cert.origin = "whole";
        return cert;
    }

    const bool strict = sys.cdf.strictly_increasing();
    std::optional<ChainCertificate> found;
    if (options.order_seed) {
        try {
            IntervalSet seed = intersect(order_minimum_set(sys, m, options.seed_guard), within);
            if (!measure(seed, sys.cdf).is_zero()) {
                ChainCertificate cert = verify_chain(sys, seed, m);
                if (cert.valid()) {
                    cert.origin = "order-minimum";
                    found = std::move(cert);
                }
            }
        } catch (const ComplexityError&) {
            // iterates too large for the guard; fall through to cell scanning
        }
    }

    int deepest = 0;
    std::size_t tried = 0;
    for (int d = 1; d <= depth && !found; ++d) {
        std::vector<Interval> cells;
        try {
            cells = itinerary_cells(sys.map, d, options.guard);
        } catch (const ComplexityError&) {
            break;
        }
        deepest = d;
        for (const auto& cell : cells) {
            IntervalSet piece = intersect(IntervalSet::interval(cell.lo, cell.hi), within);
            if (piece.empty() || measure(piece, sys.cdf).is_zero()) continue;
            ++tried;
            if (!is_chain(sys, piece, m, strict)) continue;
            ChainCertificate cert = verify_chain(sys, piece, m);
            cert.search_depth = d;
            cert.origin = "cell";
            found = std::move(cert);
            break;
        }
    }
    if (!found)
        throw ChainNotFoundError("no " + std::to_string(m) + "-chain among itinerary cells up to depth " +
                                     std::to_string(deepest) + " (" + std::to_string(tried) + " candidates tried)",
                                 deepest, tried);

    grow_chain(sys, *found, within, depth, options.guard);
    return *found;
}

}  // namespace rokhlin
