#ifndef ROKHLIN_TOWER_HPP
#define ROKHLIN_TOWER_HPP

#include "rokhlin/aperiodicity.hpp"
#include "rokhlin/chain_search.hpp"
#include "rokhlin/dynamics.hpp"

#include <cstddef>
#include <vector>

namespace rokhlin {

/// Largest number of parts a single entrance level may have before the
/// construction gives up with a ComplexityError.
inline constexpr std::size_t kDefaultLevelPartBudget = std::size_t{1} << 20;

/// First-entrance levels F^0 = F, F^{k+1} = T^{-1}F^k \ F.
struct EntrancePartition {
    IntervalSet base;
    std::vector<IntervalSet> levels;
    /// 1 - sum of mu(F^k) over the computed levels
    Rational residual;

    int depth() const { return static_cast<int>(levels.size()) - 1; }
    /// Union of the computed levels, i.e. the union of T^{-j}F for j <= depth().
    IntervalSet saturation() const;
};

/// Levels are produced one at a time; the recursion needs only the previous
/// level and F.
class EntranceSequence {
public:
    EntranceSequence(const SystemSpec& sys, IntervalSet base, std::size_t part_budget = kDefaultLevelPartBudget);

    /// Computes levels up to and including `k`.
    void extend_to(int k);
    const EntrancePartition& partition() const { return part_; }
    const Rational& residual() const { return part_.residual; }
    int depth() const { return part_.depth(); }

private:
    const SystemSpec& sys_;
    std::size_t budget_;
    EntrancePartition part_;
};

EntrancePartition first_entrance_partition(const SystemSpec& sys, const IntervalSet& f, int k,
                                           std::size_t part_budget = kDefaultLevelPartBudget);

struct Saturation {
    IntervalSet set;
    Rational deficit;
};

/// Union of T^{-j}F for j <= K and 1 minus its measure.
Saturation saturate(const SystemSpec& sys, const IntervalSet& f, int k,
                    std::size_t part_budget = kDefaultLevelPartBudget);

struct SaturationOptions {
    Rational tolerance = Rational(1, 1L << 20);
    std::size_t guard = kDefaultBranchGuard;
    std::size_t part_budget = kDefaultLevelPartBudget;
};

/// Unions compatible pieces of the uncovered region into the chain base
/// until the depth-K saturation deficit is at most the tolerance. Levels
/// are only computed until the deficit drops below the tolerance, since the
/// deficit is nonincreasing in K. Throws ChainNotFoundError when no piece of
/// the uncovered region can be added.
ChainCertificate enlarge_to_saturation(const SystemSpec& sys, const ChainCertificate& chain, int k, int depth,
                                       const SaturationOptions& options = {});

struct LevelIntersection {
    int i = 0;
    int j = 0;
    Rational measure;
};

/// Exact certification of the sets T^{-j}E, j < n.
struct TowerVerification {
    int n = 1;
    IntervalSet base;
    std::vector<IntervalSet> level_sets;
    std::vector<Rational> level_measures;
    /// mu(T^{-i}E & T^{-j}E) for 0 <= i < j < n
    std::vector<LevelIntersection> pairwise_intersections;
    /// Union of the level sets.
    IntervalSet support;
    Rational tower_measure;

    bool disjoint() const;
};

TowerVerification verify_tower(const SystemSpec& sys, const IntervalSet& e, int n);

/// Minimal m with m >= n and 1/m < epsilon/(n-1); 1 when n = 1.
int select_chain_length(int n, const Rational& epsilon);

struct TowerOptions {
    std::size_t guard = kDefaultBranchGuard;
    std::size_t part_budget = kDefaultLevelPartBudget;
    Rational saturation_tolerance = Rational(1, 1L << 20);
    /// Try enlarge_to_saturation when the first chain base falls short.
    bool enlarge = true;
    ChainSearchOptions search;
};

struct TowerReport {
    int n = 1;
    Rational epsilon;
    int m = 1;
    PreservationReport preservation;
    /// Defect reports for j = 1..m
    std::vector<DefectReport> defects;
    ChainCertificate chain;
    bool enlarged = false;

    /// Requested cap K on the entrance index of the base levels.
    int max_depth = 0;
    /// Largest kn-1 used in E; at most max_depth.
    int truncation_depth = -1;
    /// Entrance levels F^0..F^L with L = truncation_depth + n - 1.
    EntrancePartition entrance;
    /// mu(F^k) for k = 0..L
    std::vector<Rational> entrance_measures;

    TowerVerification tower;
    /// 1 - (n-1) mu(F)
    Rational theorem_bound;
    /// sum of mu(F^i) for i <= n-2
    Rational low_levels;
    /// mu(tower & (F^0 u ... u F^{n-2}))
    Rational spill;
    /// residual - spill; tower_measure = 1 - low_levels - truncation_loss
    Rational truncation_loss;
    /// tower_measure - (1 - epsilon)
    Rational margin;

    const Rational& residual() const { return entrance.residual; }
    const Rational& tower_measure() const { return tower.tower_measure; }
    bool certified() const { return tower.disjoint() && margin.sign() > 0; }
};

/// Runs the whole construction and returns the report without enforcing the
/// bound. Precondition failures throw NotPreservingError, DefectPositiveError
/// or ChainNotFoundError.
TowerReport construct_tower(const SystemSpec& sys, int n, const Rational& epsilon, int k, int depth,
                            const TowerOptions& options = {});

/// construct_tower, then BoundNotMetError unless the report is certified.
TowerReport build_tower(const SystemSpec& sys, int n, const Rational& epsilon, int k, int depth,
                        const TowerOptions& options = {});

}  // namespace rokhlin

#endif  // ROKHLIN_TOWER_HPP
