#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rct/delay.hpp"

namespace rct {

// Unordered node pairs whose clock arrivals must be balanced. Pairs are
// stored once with first < second; cost functions that sum over ordered
// pairs count each entry twice, which cancels against the doubled
// normalizer, so the mean over ordered pairs equals sum / pairs.size().
struct PairSet {
    std::vector<std::pair<int, int>> pairs; // sorted lexicographically
    int n_prime = 0; // max nodes any single node must balance against, itself included
};

PairSet all_pairs(int node_count);

// Pairs of blocks that share at least one placement of the sliding window.
// A window at least as large as the grid degenerates to all pairs.
PairSet window_pairs(const RegionModel& region, const WindowSpec& window);

// Mean absolute difference of arrivals against the furthest node.
// Defined as 0 for a single-node region.
Ratio l_abs_mean(const ArrivalProfile& arrivals);

// Mean absolute arrival difference over a pair set (the all-pairs set
// gives the fully global cost). Defined as 0 for an empty pair set.
Ratio g_abs_mean(const ArrivalProfile& arrivals, const PairSet& pairs);

// Per node, the tap minimizing the absolute difference to the pinned
// reference arrival of node N; ties toward the lower index. Scans all M
// taps per node.
TapAssignment local_optimize(const DelayProfile& profile, const TapLine& taps, int corner);

struct PrunedCandidates {
    std::vector<std::vector<int>> candidates; // per node, sorted, 1 or 2 entries
    std::vector<TimeFs> ideal;                // ideal tap delay per node
    std::vector<bool> clamped;                // ideal fell outside [t_1, t_M]
};

// Ideal tap delay (reference arrival minus natural delay) and bracketing:
// each node keeps the two contiguous taps around its ideal, clamped to a
// singleton at the ends of the line. Node N keeps only tap 1.
PrunedCandidates ideal_taps_and_prune(const DelayProfile& profile, const TapLine& taps,
                                      int corner);

struct SearchStats {
    std::string method;
    std::uint64_t configurations_examined = 0;
};

struct OptimizeResult {
    TapAssignment assignment;
    Ratio cost;
    SearchStats stats;
};

struct GlobalSearchOptions {
    // Preferred evaluation order for the sweep DP (column-major over the
    // grid); node id order when empty.
    std::vector<int> sweep_order;
    // Largest pair span (in sweep positions) the DP will take on.
    int dp_band_limit = 14;
    // Largest node count the branch-and-bound fallback will take on.
    int bb_node_limit = 24;
};

// Exact minimizer of the pair-set cost over the pruned candidate space.
// Uses a column-sweep DP when the pair interaction is banded under the
// sweep order, otherwise branch-and-bound seeded with the local solution.
// Ties are broken toward the lexicographically smallest index sequence
// (in sweep order on the DP path). Throws GuardError past the guards.
OptimizeResult global_optimize(const DelayProfile& profile, const TapLine& taps, int corner,
                               const PrunedCandidates& candidates, const PairSet& pairs,
                               const GlobalSearchOptions& options = {});

// Column-major sweep order for a region (columns in propagation order,
// bands within a column), keeping window pair spans small.
std::vector<int> column_sweep_order(const RegionModel& region);

enum class Objective { l_abs_mean, g_abs_mean };

// Exhaustive enumeration of the full (unpruned) space with node N pinned to
// tap 1. Refuses to run if M^(N-1) exceeds `limit`.
OptimizeResult brute_force_oracle(const DelayProfile& profile, const TapLine& taps, int corner,
                                  const PairSet& pairs, Objective objective,
                                  std::uint64_t limit);

struct CostReport {
    Ratio l;                  // vs the furthest node
    Ratio g_all;              // over all pairs
    std::optional<Ratio> g_window;
    TimeFs skew{0};           // max pairwise arrival difference
    std::vector<std::int64_t> diff_to_furthest_fs; // signed, per node
};

CostReport make_cost_report(const ArrivalProfile& arrivals, const PairSet* window);

} // namespace rct
