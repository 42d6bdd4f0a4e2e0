#include "rct/optimize.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace rct {

PairSet all_pairs(int node_count) {
    PairSet ps;
    for (int x = 1; x <= node_count; ++x)
        for (int y = x + 1; y <= node_count; ++y)
            ps.pairs.emplace_back(x, y);
    ps.n_prime = node_count;
    return ps;
}

namespace {

// Window start offsets along one axis: stride multiples plus a final
// placement flush with the far edge so the whole grid is covered.
std::vector<int> window_starts(int grid, int win, int stride) {
    if (win >= grid)
        return {0};
    std::vector<int> starts;
    for (int x = 0; x + win <= grid; x += stride)
        starts.push_back(x);
    if (starts.back() + win < grid)
        starts.push_back(grid - win);
    return starts;
}

} // namespace

PairSet window_pairs(const RegionModel& region, const WindowSpec& window) {
    auto col_starts = window_starts(region.floorplan.cols, window.cols, window.stride_cols);
    auto row_starts = window_starts(region.floorplan.rows, window.rows, window.stride_rows);

    std::set<std::pair<int, int>> pairs;
    std::vector<std::set<int>> neighbors(static_cast<std::size_t>(region.node_count() + 1));
    std::vector<int> contained;
    for (int r0 : row_starts)
        for (int c0 : col_starts) {
            contained.clear();
            for (const RegionNode& n : region.nodes) {
                const BlockType& bt = region.library.type(n.type_index);
                if (n.col >= c0 && n.col + bt.width <= c0 + window.cols && n.row >= r0 &&
                    n.row + bt.height <= r0 + window.rows)
                    contained.push_back(n.id);
            }
            for (std::size_t i = 0; i < contained.size(); ++i)
                for (std::size_t j = i + 1; j < contained.size(); ++j) {
                    int a = contained[i], b = contained[j];
                    if (a > b)
                        std::swap(a, b);
                    pairs.emplace(a, b);
                    neighbors[static_cast<std::size_t>(a)].insert(b);
                    neighbors[static_cast<std::size_t>(b)].insert(a);
                }
        }

    PairSet ps;
    ps.pairs.assign(pairs.begin(), pairs.end());
    ps.n_prime = region.node_count() > 0 ? 1 : 0;
    for (int id = 1; id <= region.node_count(); ++id)
        ps.n_prime = std::max(ps.n_prime,
                              static_cast<int>(neighbors[static_cast<std::size_t>(id)].size()) + 1);
    return ps;
}

Ratio l_abs_mean(const ArrivalProfile& arrivals) {
    int n = static_cast<int>(arrivals.arrival.size());
    if (n <= 1)
        return Ratio{0, 1};
    TimeFs ref = arrivals.at(n);
    std::int64_t sum = 0;
    for (int x = 1; x <= n - 1; ++x)
        sum += abs(arrivals.at(x) - ref).fs;
    return Ratio::of(sum, n - 1);
}

Ratio g_abs_mean(const ArrivalProfile& arrivals, const PairSet& pairs) {
    if (pairs.pairs.empty())
        return Ratio{0, 1};
    std::int64_t sum = 0;
    for (const auto& [x, y] : pairs.pairs)
        sum += abs(arrivals.at(x) - arrivals.at(y)).fs;
    return Ratio::of(sum, static_cast<std::int64_t>(pairs.pairs.size()));
}

TapAssignment local_optimize(const DelayProfile& profile, const TapLine& taps, int corner) {
    int n = static_cast<int>(profile.natural.size());
    int m = taps.tap_count();
    TimeFs ref = profile.at(n) + taps.min_tap(corner);

    TapAssignment assignment;
    assignment.indices.assign(static_cast<std::size_t>(n), 1);
    for (int x = 1; x <= n - 1; ++x) {
        int best = 1;
        TimeFs best_diff = abs(profile.at(x) + taps.tap(corner, 1) - ref);
        for (int j = 2; j <= m; ++j) {
            TimeFs diff = abs(profile.at(x) + taps.tap(corner, j) - ref);
            if (diff < best_diff) {
                best_diff = diff;
                best = j;
            }
        }
        assignment.indices[static_cast<std::size_t>(x - 1)] = best;
    }
    return assignment;
}

PrunedCandidates ideal_taps_and_prune(const DelayProfile& profile, const TapLine& taps,
                                      int corner) {
    int n = static_cast<int>(profile.natural.size());
    int m = taps.tap_count();
    TimeFs ref = profile.at(n) + taps.min_tap(corner);

    PrunedCandidates out;
    for (int x = 1; x <= n; ++x) {
        TimeFs ideal = ref - profile.at(x);
        out.ideal.push_back(ideal);
        if (x == n) {
            out.candidates.push_back({1});
            out.clamped.push_back(false);
            continue;
        }
        if (ideal < taps.min_tap(corner)) {
            out.candidates.push_back({1});
            out.clamped.push_back(true);
        } else if (ideal > taps.max_tap(corner)) {
            out.candidates.push_back({m});
            out.clamped.push_back(true);
        } else if (ideal == taps.max_tap(corner)) {
            out.candidates.push_back({m});
            out.clamped.push_back(false);
        } else {
            // Largest index whose delay does not exceed the ideal; the pair
            // {lb, lb+1} brackets it.
            int lb = 1;
            for (int j = 2; j <= m && taps.tap(corner, j) <= ideal; ++j)
                lb = j;
            out.candidates.push_back({lb, lb + 1});
            out.clamped.push_back(false);
        }
    }
    return out;
}

std::vector<int> column_sweep_order(const RegionModel& region) {
    std::vector<int> order(static_cast<std::size_t>(region.node_count()));
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i) + 1;
    bool rightward = region.floorplan.orientation == Orientation::top_down_left_right ||
                     region.floorplan.orientation == Orientation::bottom_up_left_right;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const RegionNode& na = region.node(a);
        const RegionNode& nb = region.node(b);
        int ca = rightward ? na.col : -na.col;
        int cb = rightward ? nb.col : -nb.col;
        if (ca != cb)
            return ca < cb;
        return na.band < nb.band;
    });
    return order;
}

namespace {

struct Candidates {
    // Arrival values per node and per candidate choice, plus the tap index
    // behind each choice. choice 1 exists only for two-candidate nodes.
    std::vector<std::array<std::int64_t, 2>> arrival;
    std::vector<std::array<int, 2>> tap;
    std::vector<int> count;
};

Candidates expand_candidates(const DelayProfile& profile, const TapLine& taps, int corner,
                             const PrunedCandidates& pruned) {
    int n = static_cast<int>(profile.natural.size());
    if (static_cast<int>(pruned.candidates.size()) != n)
        throw ModelError("global_optimize: candidate set size does not match node count");
    Candidates c;
    c.arrival.resize(static_cast<std::size_t>(n));
    c.tap.resize(static_cast<std::size_t>(n));
    c.count.resize(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
        const auto& cand = pruned.candidates[static_cast<std::size_t>(x - 1)];
        if (cand.empty() || cand.size() > 2)
            throw ModelError("global_optimize: node " + std::to_string(x) +
                             " must have 1 or 2 candidates");
        c.count[static_cast<std::size_t>(x - 1)] = static_cast<int>(cand.size());
        for (std::size_t k = 0; k < cand.size(); ++k) {
            c.tap[static_cast<std::size_t>(x - 1)][k] = cand[k];
            c.arrival[static_cast<std::size_t>(x - 1)][k] =
                (profile.at(x) + taps.tap(corner, cand[k])).fs;
        }
    }
    return c;
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

// Branch-and-bound over node id order. Explores candidate choices in
// ascending tap order, so the first optimum found is the lexicographically
// smallest; subtrees are pruned only when they provably cannot contain an
// equally good solution that could still become the incumbent.
struct BranchAndBound {
    const Candidates& cand;
    const std::vector<std::pair<int, int>>& pairs;
    int n;
    std::vector<std::vector<int>> pairs_with_earlier; // per node: partners with smaller id

    std::vector<int> choice;
    std::vector<std::int64_t> value;
    std::int64_t closed = 0;

    std::int64_t best_cost;
    bool have_incumbent = false;
    std::vector<int> best_choice;
    std::uint64_t leaves = 0;

    BranchAndBound(const Candidates& c, const std::vector<std::pair<int, int>>& p,
                   std::int64_t upper_bound)
        : cand(c), pairs(p), n(static_cast<int>(c.count.size())), best_cost(upper_bound) {
        pairs_with_earlier.resize(static_cast<std::size_t>(n + 1));
        for (const auto& [x, y] : pairs)
            pairs_with_earlier[static_cast<std::size_t>(y)].push_back(x);
        choice.assign(static_cast<std::size_t>(n), 0);
        value.assign(static_cast<std::size_t>(n), 0);
    }

    // Bound for the subtree where nodes 1..k are decided: cost of closed
    // pairs, plus per-pair minima for pairs crossing the frontier, plus
    // per-pair minima for fully undecided pairs.
    std::int64_t lower_bound(int k) const {
        std::int64_t bound = closed;
        for (const auto& [x, y] : pairs) {
            if (y <= k)
                continue; // closed, already in `closed`
            std::int64_t mn = INT64_MAX;
            if (x <= k) {
                std::int64_t ax = value[static_cast<std::size_t>(x - 1)];
                for (int b = 0; b < cand.count[static_cast<std::size_t>(y - 1)]; ++b)
                    mn = std::min(mn, abs64(ax - cand.arrival[static_cast<std::size_t>(y - 1)][b]));
            } else {
                for (int a = 0; a < cand.count[static_cast<std::size_t>(x - 1)]; ++a)
                    for (int b = 0; b < cand.count[static_cast<std::size_t>(y - 1)]; ++b)
                        mn = std::min(mn,
                                      abs64(cand.arrival[static_cast<std::size_t>(x - 1)][a] -
                                            cand.arrival[static_cast<std::size_t>(y - 1)][b]));
            }
            bound += mn;
        }
        return bound;
    }

    bool prunable(std::int64_t bound) const {
        return have_incumbent ? bound >= best_cost : bound > best_cost;
    }

    void run(int k) {
        if (k == n) {
            ++leaves;
            if (closed < best_cost || (!have_incumbent && closed == best_cost)) {
                best_cost = closed;
                best_choice = choice;
                have_incumbent = true;
            }
            return;
        }
        for (int c = 0; c < cand.count[static_cast<std::size_t>(k)]; ++c) {
            std::int64_t a = cand.arrival[static_cast<std::size_t>(k)][c];
            std::int64_t added = 0;
            for (int x : pairs_with_earlier[static_cast<std::size_t>(k + 1)])
                added += abs64(value[static_cast<std::size_t>(x - 1)] - a);
            choice[static_cast<std::size_t>(k)] = c;
            value[static_cast<std::size_t>(k)] = a;
            closed += added;
            if (!prunable(lower_bound(k + 1)))
                run(k + 1);
            closed -= added;
        }
    }
};

struct SweepDp {
    // Column-sweep DP. States encode the choices of the previous `width`
    // nodes in sweep order; pair costs accrue when the later node of the
    // pair is placed.
    const Candidates& cand;
    std::vector<int> order;        // sweep position -> node id
    std::vector<int> pos_of;       // node id -> sweep position (0-based)
    std::vector<std::vector<int>> earlier; // per position: positions of partners already placed
    int n;
    int width;

    SweepDp(const Candidates& c, std::vector<int> ord,
            const std::vector<std::pair<int, int>>& pairs)
        : cand(c), order(std::move(ord)), n(static_cast<int>(order.size())) {
        pos_of.assign(static_cast<std::size_t>(n + 1), 0);
        for (int p = 0; p < n; ++p)
            pos_of[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
        earlier.resize(static_cast<std::size_t>(n));
        width = 1;
        for (const auto& [x, y] : pairs) {
            int px = pos_of[static_cast<std::size_t>(x)];
            int py = pos_of[static_cast<std::size_t>(y)];
            if (px > py)
                std::swap(px, py);
            earlier[static_cast<std::size_t>(py)].push_back(px);
            width = std::max(width, py - px);
        }
        for (auto& e : earlier)
            std::sort(e.begin(), e.end());
    }

    int choice_at(std::uint32_t state, int pos, int current) const {
        // Bit (current-1-pos) of the state holds the choice of `pos`.
        return static_cast<int>((state >> (current - 1 - pos)) & 1u);
    }

    std::int64_t close_cost(int pos, int c, std::uint32_t state) const {
        int node = order[static_cast<std::size_t>(pos)];
        std::int64_t a = cand.arrival[static_cast<std::size_t>(node - 1)][c];
        std::int64_t sum = 0;
        for (int px : earlier[static_cast<std::size_t>(pos)]) {
            int pn = order[static_cast<std::size_t>(px)];
            int pc = choice_at(state, px, pos);
            sum += abs64(a - cand.arrival[static_cast<std::size_t>(pn - 1)][pc]);
        }
        return sum;
    }

    // cost_to_go[k][s]: minimal cost of placing nodes k.. given that state s
    // holds the choices of the previous `width` nodes.
    std::vector<std::vector<std::int64_t>> cost_to_go;
    std::uint64_t evaluations = 0;

    void solve() {
        std::uint32_t states = 1u << width;
        std::uint32_t mask = states - 1;
        cost_to_go.assign(static_cast<std::size_t>(n + 1),
                          std::vector<std::int64_t>(states, 0));
        for (int k = n - 1; k >= 0; --k) {
            for (std::uint32_t s = 0; s < states; ++s) {
                std::int64_t best = INT64_MAX;
                int node = order[static_cast<std::size_t>(k)];
                for (int c = 0; c < cand.count[static_cast<std::size_t>(node - 1)]; ++c) {
                    std::uint32_t next = ((s << 1) | static_cast<std::uint32_t>(c)) & mask;
                    std::int64_t v = close_cost(k, c, s) +
                                     cost_to_go[static_cast<std::size_t>(k + 1)][next];
                    best = std::min(best, v);
                    ++evaluations;
                }
                cost_to_go[static_cast<std::size_t>(k)][s] = best;
            }
        }
    }

    // Reconstruct the minimal solution, preferring the lower tap at each
    // sweep step (lexicographically smallest in sweep order).
    std::vector<int> reconstruct() const {
        std::uint32_t mask = (1u << width) - 1;
        std::vector<int> choice(static_cast<std::size_t>(n), 0);
        std::uint32_t s = 0;
        std::int64_t remaining = cost_to_go[0][0];
        for (int k = 0; k < n; ++k) {
            int node = order[static_cast<std::size_t>(k)];
            bool placed = false;
            for (int c = 0; c < cand.count[static_cast<std::size_t>(node - 1)] && !placed; ++c) {
                std::uint32_t next = ((s << 1) | static_cast<std::uint32_t>(c)) & mask;
                std::int64_t inc = close_cost(k, c, s);
                if (inc + cost_to_go[static_cast<std::size_t>(k + 1)][next] == remaining) {
                    choice[static_cast<std::size_t>(node - 1)] = c;
                    remaining -= inc;
                    s = next;
                    placed = true;
                }
            }
            if (!placed)
                throw ModelError("sweep DP reconstruction failed");
        }
        return choice;
    }
};

} // namespace

OptimizeResult global_optimize(const DelayProfile& profile, const TapLine& taps, int corner,
                               const PrunedCandidates& candidates, const PairSet& pairs,
                               const GlobalSearchOptions& options) {
    int n = static_cast<int>(profile.natural.size());
    Candidates cand = expand_candidates(profile, taps, corner, candidates);

    OptimizeResult result;
    std::int64_t den = static_cast<std::int64_t>(pairs.pairs.size());

    if (pairs.pairs.empty() || n == 1) {
        // Nothing couples the nodes; the lexicographically smallest
        // configuration is the per-node lowest candidate.
        result.assignment.indices.resize(static_cast<std::size_t>(n));
        for (int x = 1; x <= n; ++x)
            result.assignment.indices[static_cast<std::size_t>(x - 1)] =
                cand.tap[static_cast<std::size_t>(x - 1)][0];
        result.cost = Ratio{0, 1};
        result.stats = SearchStats{"degenerate", 0};
        return result;
    }

    std::vector<int> order = options.sweep_order;
    if (order.empty())
        for (int x = 1; x <= n; ++x)
            order.push_back(x);
    if (static_cast<int>(order.size()) != n)
        throw ModelError("global_optimize: sweep order does not cover all nodes");

    int band_limit = std::min(options.dp_band_limit, 25);
    SweepDp dp(cand, order, pairs.pairs);
    bool dp_fits = dp.width <= band_limit &&
                   (static_cast<std::uint64_t>(n + 1) << dp.width) <= (1ull << 26);
    if (dp_fits) {
        dp.solve();
        std::vector<int> choice = dp.reconstruct();
        result.assignment.indices.resize(static_cast<std::size_t>(n));
        for (int x = 1; x <= n; ++x)
            result.assignment.indices[static_cast<std::size_t>(x - 1)] =
                cand.tap[static_cast<std::size_t>(x - 1)]
                        [static_cast<std::size_t>(choice[static_cast<std::size_t>(x - 1)])];
        result.cost = Ratio::of(dp.cost_to_go[0][0], den);
        result.stats = SearchStats{"column-sweep-dp", dp.evaluations};
        return result;
    }

    if (n > options.bb_node_limit)
        throw GuardError("global_optimize: pair spans are too wide for the sweep DP and " +
                         std::to_string(n) + " nodes exceed the branch-and-bound limit of " +
                         std::to_string(options.bb_node_limit));

    // Seed the bound with the local solution, which always lies inside the
    // pruned space.
    TapAssignment seed = local_optimize(profile, taps, corner);
    ArrivalProfile seed_arrivals = arrival_times(profile, taps, seed, corner);
    std::int64_t seed_sum = 0;
    for (const auto& [x, y] : pairs.pairs)
        seed_sum += abs(seed_arrivals.at(x) - seed_arrivals.at(y)).fs;

    BranchAndBound bb(cand, pairs.pairs, seed_sum);
    bb.run(0);
    if (!bb.have_incumbent)
        throw ModelError("global_optimize: branch-and-bound found no solution");
    result.assignment.indices.resize(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x)
        result.assignment.indices[static_cast<std::size_t>(x - 1)] =
            cand.tap[static_cast<std::size_t>(x - 1)]
                    [static_cast<std::size_t>(bb.best_choice[static_cast<std::size_t>(x - 1)])];
    result.cost = Ratio::of(bb.best_cost, den);
    result.stats = SearchStats{"branch-and-bound", bb.leaves};
    return result;
}

OptimizeResult brute_force_oracle(const DelayProfile& profile, const TapLine& taps, int corner,
                                  const PairSet& pairs, Objective objective,
                                  std::uint64_t limit) {
    int n = static_cast<int>(profile.natural.size());
    int m = taps.tap_count();

    OptimizeResult result;
    if (n == 1) {
        result.assignment.indices = {1};
        result.cost = Ratio{0, 1};
        result.stats = SearchStats{"brute-force", 0};
        return result;
    }

    if (m < 1)
        throw ModelError("brute_force_oracle: empty tap line");

    // M^(N-1) enumerations with node N pinned; refuse, never sample.
    std::uint64_t total = 1;
    for (int i = 0; i < n - 1; ++i) {
        if (total > limit / static_cast<std::uint64_t>(m))
            throw GuardError("brute_force_oracle: " + std::to_string(m) + "^" +
                             std::to_string(n - 1) + " configurations exceed the limit of " +
                             std::to_string(limit));
        total *= static_cast<std::uint64_t>(m);
    }
    if (total > limit)
        throw GuardError("brute_force_oracle: search space exceeds the limit of " +
                         std::to_string(limit));

    // Arrival value per node and tap.
    std::vector<std::vector<std::int64_t>> arr(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
        arr[static_cast<std::size_t>(x - 1)].resize(static_cast<std::size_t>(m + 1));
        for (int j = 1; j <= m; ++j)
            arr[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(j)] =
                (profile.at(x) + taps.tap(corner, j)).fs;
    }
    std::int64_t ref = arr[static_cast<std::size_t>(n - 1)][1];

    std::vector<int> idx(static_cast<std::size_t>(n), 1);
    std::vector<int> best;
    std::int64_t best_sum = INT64_MAX;
    std::int64_t den = objective == Objective::l_abs_mean
                           ? n - 1
                           : static_cast<std::int64_t>(pairs.pairs.size());
    std::uint64_t examined = 0;

    while (true) {
        std::int64_t sum = 0;
        if (objective == Objective::l_abs_mean) {
            for (int x = 1; x <= n - 1; ++x)
                sum += abs64(arr[static_cast<std::size_t>(x - 1)]
                                [static_cast<std::size_t>(idx[static_cast<std::size_t>(x - 1)])] -
                             ref);
        } else {
            for (const auto& [x, y] : pairs.pairs)
                sum += abs64(arr[static_cast<std::size_t>(x - 1)]
                                [static_cast<std::size_t>(idx[static_cast<std::size_t>(x - 1)])] -
                             arr[static_cast<std::size_t>(y - 1)]
                                [static_cast<std::size_t>(idx[static_cast<std::size_t>(y - 1)])]);
        }
        ++examined;
        if (sum < best_sum) {
            best_sum = sum;
            best = idx;
        }
        // Lexicographic odometer over nodes 1..N-1.
        int x = n - 2;
        while (x >= 0 && idx[static_cast<std::size_t>(x)] == m) {
            idx[static_cast<std::size_t>(x)] = 1;
            --x;
        }
        if (x < 0)
            break;
        idx[static_cast<std::size_t>(x)]++;
    }

    result.assignment.indices = best;
    result.cost = den == 0 ? Ratio{0, 1} : Ratio::of(best_sum, den);
    result.stats = SearchStats{"brute-force", examined};
    return result;
}

CostReport make_cost_report(const ArrivalProfile& arrivals, const PairSet* window) {
    CostReport report;
    int n = static_cast<int>(arrivals.arrival.size());
    report.l = l_abs_mean(arrivals);
    report.g_all = g_abs_mean(arrivals, all_pairs(n));
    if (window)
        report.g_window = g_abs_mean(arrivals, *window);
    if (n > 0) {
        TimeFs lo = arrivals.arrival[0], hi = arrivals.arrival[0];
        for (TimeFs a : arrivals.arrival) {
            lo = std::min(lo, a);
            hi = std::max(hi, a);
        }
        report.skew = hi - lo;
        for (int x = 1; x <= n; ++x)
            report.diff_to_furthest_fs.push_back((arrivals.at(x) - arrivals.at(n)).fs);
    }
    return report;
}

} // namespace rct
