#include "rokhlin/tower.hpp"

#include "rokhlin/errors.hpp"
#include "rokhlin/measure.hpp"

#include <algorithm>
#include <limits>

namespace rokhlin {

namespace {

constexpr int kMaxEnlargeRounds = 32;
constexpr std::size_t kGrowTrigger = 4096;

std::string describe(const Rational& r) { return r.str() + " (~" + std::to_string(r.to_double()) + ")"; }

}  // namespace

IntervalSet EntrancePartition::saturation() const { return unite_all(levels); }

EntranceSequence::EntranceSequence(const SystemSpec& sys, IntervalSet base, std::size_t part_budget)
    : sys_(sys), budget_(part_budget) {
    const Rational mass = measure(base, sys.cdf);
    if (mass.is_zero()) throw DomainError("entrance base has measure zero");
    part_.residual = Rational(1) - mass;
    part_.levels.push_back(base);
    part_.base = std::move(base);
}

void EntranceSequence::extend_to(int k) {
    while (depth() < k) {
        const IntervalSet& last = part_.levels.back();
        IntervalSet next = last.empty() ? IntervalSet() : difference(preimage(sys_.map, last), part_.base);
        if (next.size() > budget_)
            throw ComplexityError("entrance level " + std::to_string(depth() + 1) + " has " +
                                      std::to_string(next.size()) + " parts",
                                  next.size(), budget_);
        part_.residual -= measure(next, sys_.cdf);
        part_.levels.push_back(std::move(next));
    }
}

EntrancePartition first_entrance_partition(const SystemSpec& sys, const IntervalSet& f, int k,
                                           std::size_t part_budget) {
    if (k < 0) throw DomainError("entrance depth must be >= 0");
    EntranceSequence seq(sys, f, part_budget);
    seq.extend_to(k);
    return seq.partition();
}

Saturation saturate(const SystemSpec& sys, const IntervalSet& f, int k, std::size_t part_budget) {
    EntrancePartition p = first_entrance_partition(sys, f, k, part_budget);
    return Saturation{p.saturation(), p.residual};
}

ChainCertificate enlarge_to_saturation(const SystemSpec& sys, const ChainCertificate& chain, int k, int depth,
                                       const SaturationOptions& options) {
    if (k < 0) throw DomainError("entrance depth must be >= 0");
    if (!chain.valid())
        throw ChainNotFoundError("input base does not induce a " + std::to_string(chain.length) + "-chain", 0, 0);

    ChainCertificate cert = chain;
    // Levels are only followed while they stay small; a fragmented level
    // means the base should grow before the orbits are followed further.
    std::size_t horizon_parts = kGrowTrigger;
    for (int round = 0;; ++round) {
        EntranceSequence seq(sys, cert.base, options.part_budget);
        bool cut_short = false;
        while (seq.depth() < k && seq.residual() > options.tolerance) {
            if (seq.partition().levels.back().size() > horizon_parts) {
                cut_short = true;
                break;
            }
            seq.extend_to(seq.depth() + 1);
        }
        if (seq.residual() <= options.tolerance) return cert;
        if (round == kMaxEnlargeRounds)
            throw ChainNotFoundError("saturation deficit still " + describe(seq.residual()) + " after " +
                                         std::to_string(round) + " enlargement rounds",
                                     depth, 0);

        const IntervalSet uncovered = complement(seq.partition().saturation());
        if (grow_chain(sys, cert, uncovered, depth, options.guard) > 0) continue;
        if (!cut_short)
            throw ChainNotFoundError("no " + std::to_string(cert.length) +
                                         "-chain piece fits in the uncovered region (deficit " +
                                         describe(seq.residual()) + " at K=" + std::to_string(seq.depth()) + ")",
                                     depth, 0);
        horizon_parts *= 4;
    }
}

bool TowerVerification::disjoint() const {
    return std::all_of(pairwise_intersections.begin(), pairwise_intersections.end(),
                       [](const LevelIntersection& x) { return x.measure.is_zero(); });
}

TowerVerification verify_tower(const SystemSpec& sys, const IntervalSet& e, int n) {
    if (n < 1) throw DomainError("tower height must be >= 1");
    TowerVerification v;
    v.n = n;
    v.base = e;
    v.level_sets.push_back(e);
    for (int j = 1; j < n; ++j) v.level_sets.push_back(preimage(sys.map, v.level_sets.back()));
    for (const auto& s : v.level_sets) v.level_measures.push_back(measure(s, sys.cdf));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            v.pairwise_intersections.push_back(
                LevelIntersection{i, j, measure(intersect(v.level_sets[i], v.level_sets[j]), sys.cdf)});
    v.support = unite_all(v.level_sets);
    v.tower_measure = measure(v.support, sys.cdf);
    return v;
}

int select_chain_length(int n, const Rational& epsilon) {
    if (n < 1) throw DomainError("tower height must be >= 1");
    if (epsilon.sign() <= 0 || epsilon >= Rational(1)) throw DomainError("epsilon must lie in (0, 1)");
    if (n == 1) return 1;
    const mpq_class q = mpq_class(n - 1) / epsilon.raw();
    const mpz_class floor = q.get_num() / q.get_den();
    if (!floor.fits_sint_p() || floor.get_si() >= std::numeric_limits<int>::max())
        throw DomainError("epsilon too small: chain length overflows");
    return std::max(n, static_cast<int>(floor.get_si()) + 1);
}

TowerReport construct_tower(const SystemSpec& sys, int n, const Rational& epsilon, int k, int depth,
                            const TowerOptions& options) {
    if (k < 0) throw DomainError("entrance depth must be >= 0");
    if (depth < 1) throw DomainError("search depth must be >= 1");

    TowerReport report;
    report.n = n;
    report.epsilon = epsilon;
    report.m = select_chain_length(n, epsilon);
    report.max_depth = k;

    report.preservation = verify_measure_preservation(sys);
    if (!report.preservation.preserved)
        throw NotPreservingError("map does not preserve the measure: discrepancy " +
                                 describe(report.preservation.max_discrepancy) + " at x = " +
                                 report.preservation.witness->str());

    PiecewiseAffineMap power = sys.map;
    for (int j = 1; j <= report.m; ++j) {
        try {
            if (j > 1) power = compose(sys.map, power, options.guard);
            report.defects.push_back(defect_of_power(sys, power, j, options.guard));
        } catch (const ComplexityError& e) {
            throw ComplexityError("nigh-aperiodicity defect at n=" + std::to_string(j) + " (horizon m=" +
                                      std::to_string(report.m) + "): " + e.what(),
                                  e.size(), e.limit());
        }
        if (!report.defects.back().nigh_aperiodic())
            throw DefectPositiveError("nigh-aperiodicity defect at n=" + std::to_string(j) + " is " +
                                          report.defects.back().defect.str() + "; the construction needs 0 for n <= " +
                                          std::to_string(report.m),
                                      j);
    }

    ChainSearchOptions search = options.search;
    search.guard = options.guard;
    report.chain = find_chain(sys, report.m, IntervalSet::full(), depth, search);

    const Rational target = Rational(1) - epsilon;
    while (true) {
        EntranceSequence seq(sys, report.chain.base, options.part_budget);
        seq.extend_to(std::max(0, n - 2));
        Rational low(0);
        for (int i = 0; i <= n - 2; ++i) low += measure(seq.partition().levels[i], sys.cdf);

        int chosen = -1;
        for (int step = 1; step * n - 1 <= k; ++step) {
            chosen = step * n - 1;
            seq.extend_to(chosen + n - 1);
            if (Rational(1) - low - seq.residual() > target || seq.residual().is_zero()) break;
        }

        std::vector<IntervalSet> tops;
        for (int idx = n - 1; idx <= chosen; idx += n) tops.push_back(seq.partition().levels[idx]);
        report.tower = verify_tower(sys, unite_all(tops), n);
        report.truncation_depth = chosen;
        report.entrance = seq.partition();
        report.entrance_measures.clear();
        for (const auto& f : report.entrance.levels) report.entrance_measures.push_back(measure(f, sys.cdf));
        report.low_levels = low;
        report.theorem_bound = Rational(1) - Rational(n - 1) * report.chain.base_measure;
        std::vector<IntervalSet> lows(report.entrance.levels.begin(),
                                      report.entrance.levels.begin() + std::max(0, n - 1));
        report.spill = measure(intersect(report.tower.support, unite_all(lows)), sys.cdf);
        report.truncation_loss = report.entrance.residual - report.spill;
        report.margin = report.tower.tower_measure - target;

        if (report.certified() || !options.enlarge || report.enlarged || !report.tower.disjoint()) return report;

        try {
            SaturationOptions sat{options.saturation_tolerance, options.guard, options.part_budget};
            ChainCertificate bigger = enlarge_to_saturation(sys, report.chain, k, depth, sat);
            if (bigger.base == report.chain.base) return report;
            report.chain = std::move(bigger);
            report.enlarged = true;
        } catch (const ChainNotFoundError&) {
            return report;
        } catch (const ComplexityError&) {
            return report;
        }
    }
}

TowerReport build_tower(const SystemSpec& sys, int n, const Rational& epsilon, int k, int depth,
                        const TowerOptions& options) {
    TowerReport report = construct_tower(sys, n, epsilon, k, depth, options);
    if (!report.tower.disjoint())
        throw BoundNotMetError("tower base does not induce a " + std::to_string(n) + "-chain");
    if (!report.certified())
        throw BoundNotMetError("tower measure " + describe(report.tower_measure()) + " does not exceed 1 - epsilon = " +
                               describe(Rational(1) - epsilon) + "; residual " + describe(report.residual()) +
                               " after " + std::to_string(report.entrance.depth()) +
                               " entrance levels; increase K or the search depth");
    return report;
}

}  // namespace rokhlin
