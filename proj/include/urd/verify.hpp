// verify.hpp — trust-nothing validation of decompositions and balanced star
// arrays, plus an exhaustive backtracking oracle for tiny instances.
//
// The verifier shares no code path with the constructors: every edge is
// re-derived from its raw endpoint pair and counted against E(K_v).
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "params.hpp"
#include "star.hpp"
#include "star_arrays.hpp"

namespace urd {

enum class ViolationKind {
    uncovered_edge,
    doubly_covered_edge,
    non_spanning_class,
    malformed_block,
    wrong_class_count,
    not_a_matching,
};

inline const char* to_string(ViolationKind k) {
    switch (k) {
    case ViolationKind::uncovered_edge: return "uncovered-edge";
    case ViolationKind::doubly_covered_edge: return "doubly-covered-edge";
    case ViolationKind::non_spanning_class: return "non-spanning-class";
    case ViolationKind::malformed_block: return "malformed-block";
    case ViolationKind::wrong_class_count: return "wrong-class-count";
    case ViolationKind::not_a_matching: return "not-a-matching";
    }
    return "?";
}

struct Violation {
    ViolationKind kind;
    std::string witness;
};

struct VerificationReport {
    bool ok = false;
    std::vector<Violation> violations;
    // Per difference d = 1..v/2: observed multiplicity across all classes
    // and the matching, against the expected count (v edges per difference,
    // v/2 for the half difference).
    std::vector<std::pair<long long, long long>> edge_census;

    bool has(ViolationKind k) const {
        for (const Violation& viol : violations)
            if (viol.kind == k) return true;
        return false;
    }
};

// Checks the full decomposition contract: a perfect matching, star classes
// that span with blocks of the right shape, the exact K_v edge partition, and
// the class count forced by the edge budget.
inline VerificationReport verify_urd(const Decomposition& d) {
    VerificationReport rep;
    auto fail = [&](ViolationKind k, std::string w) {
        if (rep.violations.size() < 200) rep.violations.push_back({k, std::move(w)});
    };
    const int v = d.v;
    const int n = d.n;
    if (v < 2 || v % 2 != 0 || n < 1) {
        fail(ViolationKind::malformed_block, "v=" + std::to_string(v) + ", n=" + std::to_string(n));
        return rep;
    }
    if (v > 50'000) throw std::invalid_argument("verify_urd: v too large for the edge census");

    // Class count forced by |E(K_v)| = v/2 + s * n v/(n+1).
    const long long num = static_cast<long long>(v - 2) * (n + 1);
    if (num % (2LL * n) != 0 || v % (n + 1) != 0) {
        fail(ViolationKind::wrong_class_count,
             "no integer class count exists for v=" + std::to_string(v) + ", n=" + std::to_string(n));
    } else {
        const long long s = num / (2LL * n);
        if (static_cast<long long>(d.star_classes.size()) != s)
            fail(ViolationKind::wrong_class_count,
                 std::to_string(d.star_classes.size()) + " classes, expected " + std::to_string(s));
    }

    std::vector<std::uint8_t> cover(static_cast<size_t>(v) * v, 0);
    auto add_edge = [&](int a, int b, const std::string& where) -> bool {
        if (a < 0 || b < 0 || a >= v || b >= v || a == b) {
            fail(ViolationKind::malformed_block, where + ": edge {" + std::to_string(a) + "," +
                                                     std::to_string(b) + "} out of range");
            return false;
        }
        const int u = std::min(a, b), x = std::max(a, b);
        std::uint8_t& c = cover[static_cast<size_t>(u) * v + x];
        if (c == 255) return true;
        if (++c > 1)
            fail(ViolationKind::doubly_covered_edge, where + ": edge {" + std::to_string(u) + "," +
                                                         std::to_string(x) + "} covered again");
        return true;
    };

    // (1) The matching.
    {
        std::vector<int> deg(v, 0);
        if (static_cast<int>(d.one_factor.size()) != v / 2)
            fail(ViolationKind::not_a_matching,
                 std::to_string(d.one_factor.size()) + " matching edges, expected " +
                     std::to_string(v / 2));
        for (const auto& [a, b] : d.one_factor) {
            if (!add_edge(a, b, "matching")) continue;
            ++deg[a];
            ++deg[b];
        }
        for (int x = 0; x < v; ++x)
            if (deg[x] != 1) {
                fail(ViolationKind::not_a_matching, "vertex " + std::to_string(x) + " has degree " +
                                                        std::to_string(deg[x]) + " in the matching");
                break;
            }
    }

    // (2) Each star class: v/(n+1) blocks of n distinct leaves, spanning.
    for (size_t ci = 0; ci < d.star_classes.size(); ++ci) {
        const StarFactor& f = d.star_classes[ci];
        const std::string where = "class " + std::to_string(ci);
        if (v % (n + 1) == 0 && static_cast<int>(f.stars.size()) != v / (n + 1))
            fail(ViolationKind::non_spanning_class,
                 where + " has " + std::to_string(f.stars.size()) + " blocks, expected " +
                     std::to_string(v / (n + 1)));
        std::vector<int> uses(v, 0);
        bool in_range = true;
        for (const Star& s : f.stars) {
            if (static_cast<int>(s.leaves.size()) != n) {
                fail(ViolationKind::malformed_block,
                     where + ": block centered at " + std::to_string(s.center) + " has " +
                         std::to_string(s.leaves.size()) + " leaves");
            }
            std::set<int> uniq(s.leaves.begin(), s.leaves.end());
            if (uniq.size() != s.leaves.size() || uniq.count(s.center))
                fail(ViolationKind::malformed_block,
                     where + ": block centered at " + std::to_string(s.center) +
                         " repeats a vertex");
            if (s.center < 0 || s.center >= v) in_range = false;
            for (int l : s.leaves) {
                if (l < 0 || l >= v) in_range = false;
                add_edge(s.center, l, where);
            }
            if (in_range) {
                ++uses[s.center];
                for (int l : s.leaves)
                    if (l >= 0 && l < v) ++uses[l];
            }
        }
        if (!in_range)
            fail(ViolationKind::malformed_block, where + ": vertex label out of range");
        for (int x = 0; x < v && in_range; ++x)
            if (uses[x] != 1) {
                fail(ViolationKind::non_spanning_class,
                     where + ": vertex " + std::to_string(x) + " appears " +
                         std::to_string(uses[x]) + " times");
                break;
            }
    }

    // (3) Exact edge partition, tallied per difference.
    rep.edge_census.assign(v / 2 + 1, {0, 0});
    for (int dd = 1; dd <= v / 2; ++dd)
        rep.edge_census[dd].second = (dd == v - dd || 2 * dd == v) ? v / 2 : v;
    for (int u = 0; u < v; ++u)
        for (int x = u + 1; x < v; ++x) {
            const int c = cover[static_cast<size_t>(u) * v + x];
            const int diff = std::min(x - u, v - (x - u));
            rep.edge_census[diff].first += c;
            if (c == 0)
                fail(ViolationKind::uncovered_edge,
                     "edge {" + std::to_string(u) + "," + std::to_string(x) + "} uncovered");
        }

    rep.ok = rep.violations.empty();
    return rep;
}

// Independent check of one balanced star array: partition of D', column
// congruences, and the placement rule for empty cells.
struct ArrayCheck {
    bool ok = false;
    std::string witness;
};

inline ArrayCheck verify_balanced_array(const BalancedStarArray& a, const Params& p) {
    const std::vector<int> universe = build_difference_universe(p);
    std::set<int> missing(universe.begin(), universe.end());
    const int n = p.n;
    if (a.columns != n) return {false, "array has " + std::to_string(a.columns) + " columns"};
    for (size_t r = 0; r < a.rows.size(); ++r) {
        if (static_cast<int>(a.rows[r].size()) != n)
            return {false, "row " + std::to_string(r + 1) + " has the wrong width"};
        int empty_cells = 0;
        for (int c = 0; c < n; ++c) {
            const int d = a.rows[r][c];
            if (d == kEmptyCell) {
                ++empty_cells;
                if (static_cast<int>(r) >= a.t1_rows)
                    return {false, "empty cell in completion row " + std::to_string(r + 1)};
                if (c < p.q)
                    return {false, "partial row " + std::to_string(r + 1) +
                                       " has an empty cell in column " + std::to_string(c + 1)};
                continue;
            }
            if (static_cast<int>(r) < a.t1_rows && empty_cells > 0)
                return {false, "partial row " + std::to_string(r + 1) +
                                   " has a filled cell after an empty one"};
            if (d % (n + 1) != c + 1)
                return {false, "(row " + std::to_string(r + 1) + ", col " + std::to_string(c + 1) +
                                   "): " + std::to_string(d) + " is not congruent to " +
                                   std::to_string(c + 1) + " (mod " + std::to_string(n + 1) + ")"};
            if (!missing.erase(d))
                return {false, "difference " + std::to_string(d) +
                                   " duplicated or outside the universe"};
        }
        if (empty_cells > 0 && empty_cells != n - p.q)
            return {false, "partial row " + std::to_string(r + 1) + " has " +
                               std::to_string(empty_cells) + " empty cells"};
    }
    int partial_rows = 0;
    for (int r = 0; r < a.t1_rows; ++r)
        if (std::count(a.rows[r].begin(), a.rows[r].end(), kEmptyCell) > 0) ++partial_rows;
    if (partial_rows > 1) return {false, std::to_string(partial_rows) + " partial rows"};
    if (!missing.empty())
        return {false, "difference " + std::to_string(*missing.begin()) + " never appears"};
    return {true, ""};
}

// ---- brute-force oracle ---------------------------------------------------

enum class OracleOutcome { witness, none, timeout };

struct OracleResult {
    OracleOutcome outcome = OracleOutcome::none;
    std::optional<Decomposition> decomposition;
    long long nodes = 0;
};

namespace detail {

// Exhaustive search over decompositions with the matching fixed to
// {(2i, 2i+1)}; every decomposition can be relabeled into that form, and star
// classes are explored in increasing order of their vertex-0 block, so the
// search is exhaustive up to symmetry.
//
// The driving invariant: every vertex must be a star center in exactly
// (v-2)/(2n) classes. A vertex that has spent its quota can only receive its
// remaining uncovered edges from the other endpoints, which yields cheap and
// surprisingly sharp pruning:
//   - two quota-exhausted vertices joined by an uncovered edge are a dead end;
//   - a vertex with more uncovered edges into exhausted vertices than its
//     remaining centerings can absorb (n per class) is a dead end;
//   - within the class under construction, every still-uncovered vertex needs
//     an uncovered neighbor there, and the leftover must admit enough centers.
//
// When the quota is 1 (exactly the orders v = 2(n+1)), matched partners can
// never be leaves of the same block. Sketch: the two centers of a class must
// be partners (the edge between them could otherwise never be covered), so
// the classes biject with the matching pairs; partners x and y therefore
// center in one shared class, and a common neighbor c' of theirs can be a
// leaf of at most one of their two disjoint blocks. If x and y were leaves of
// one block with opposite center pair {c, c'}, both edges {x,c'} and {y,c'}
// would still need c' as a leaf of x's and y's centering blocks, which is
// that impossible configuration.
class OracleSearch {
public:
    OracleSearch(int n, int v, long long budget)
        : n_(n), v_(v), budget_(budget),
          s_(static_cast<int>(static_cast<long long>(v - 2) * (n + 1) / (2 * n))),
          center_quota_((v - 2) / (2 * n)), adj_(v), centers_used_(v, 0) {
        for (int x = 0; x < v_; ++x) adj_[x] = (full_mask() & ~bit(x));
        for (int i = 0; i < v_ / 2; ++i) remove_edge(2 * i, 2 * i + 1);
    }

    OracleResult run() {
        OracleResult res;
        classes_.clear();
        timed_out_ = false;
        if (search_class(0, 0, {})) {
            Decomposition d;
            d.v = v_;
            d.n = n_;
            for (int i = 0; i < v_ / 2; ++i) d.one_factor.push_back({2 * i, 2 * i + 1});
            for (const auto& cls : classes_) {
                StarFactor f;
                f.v = v_;
                f.stars = cls;
                d.star_classes.push_back(std::move(f));
            }
            res.outcome = OracleOutcome::witness;
            res.decomposition = std::move(d);
        } else {
            res.outcome = timed_out_ ? OracleOutcome::timeout : OracleOutcome::none;
        }
        res.nodes = nodes_;
        return res;
    }

private:
    using Mask = std::uint32_t;

    int n_, v_;
    long long budget_;
    int s_;
    int center_quota_;
    std::vector<Mask> adj_; // uncovered neighbors
    std::vector<int> centers_used_;
    Mask exhausted_ = 0; // vertices with no centerings left
    std::vector<std::vector<Star>> classes_;
    long long nodes_ = 0;
    bool timed_out_ = false;

    Mask bit(int x) const { return Mask(1) << x; }
    Mask full_mask() const { return v_ == 32 ? ~Mask(0) : (Mask(1) << v_) - 1; }
    void remove_edge(int a, int b) {
        adj_[a] &= ~bit(b);
        adj_[b] &= ~bit(a);
    }
    void restore_edge(int a, int b) {
        adj_[a] |= bit(b);
        adj_[b] |= bit(a);
    }

    // Uncovered edges into exhausted vertices must fit into the vertex's
    // remaining centerings.
    bool center_capacity_ok(int x) const {
        const int pressure = __builtin_popcount(adj_[x] & exhausted_);
        return pressure <= n_ * (center_quota_ - centers_used_[x]);
    }

    // The part of the current class not yet covered must still be coverable:
    // every vertex there needs an uncovered neighbor there, and at least
    // |left|/(n+1) of them must be able to center a block.
    bool class_left_viable(Mask in_class) const {
        const Mask left = full_mask() & ~in_class;
        int centers_possible = 0;
        Mask scan = left;
        while (scan) {
            const int z = __builtin_ctz(scan);
            scan &= scan - 1;
            const Mask reach = adj_[z] & left;
            if (!reach) return false;
            if (!(exhausted_ & bit(z)) && __builtin_popcount(reach) >= n_) ++centers_possible;
        }
        return centers_possible >= __builtin_popcount(left) / (n_ + 1);
    }

    bool search_class(int class_idx, Mask in_class, const std::vector<int>& prev_key) {
        if (timed_out_) return false;
        if (in_class == full_mask()) {
            if (class_idx + 1 == s_) return true;
            return search_class(class_idx + 1, 0, key_of(classes_[class_idx].front()));
        }
        int x = __builtin_ctz(~in_class);
        if (class_idx >= static_cast<int>(classes_.size())) classes_.emplace_back();

        // Block with x as the center.
        if (centers_used_[x] < center_quota_) {
            std::vector<int> leaves;
            if (try_leaf_sets(class_idx, in_class, x, leaf_candidates(adj_[x] & ~in_class, x),
                              n_, -1, leaves, prev_key))
                return true;
        }
        // Block with x as a leaf of some center y.
        Mask cands = adj_[x] & ~in_class & ~exhausted_;
        while (cands) {
            const int y = __builtin_ctz(cands);
            cands &= cands - 1;
            std::vector<int> leaves{x};
            if (try_leaf_sets(class_idx, in_class, y,
                              leaf_candidates(adj_[y] & ~in_class & ~bit(x), x), n_ - 1, -1,
                              leaves, prev_key))
                return true;
        }
        if (classes_[class_idx].empty() && class_idx == static_cast<int>(classes_.size()) - 1)
            classes_.pop_back();
        return false;
    }

    // With quota 1, drop the partner of an already-committed leaf from the
    // candidate pool (see the lemma in the class comment).
    Mask leaf_candidates(Mask cands, int committed_leaf) const {
        if (center_quota_ == 1) cands &= ~bit(committed_leaf ^ 1);
        return cands;
    }

    // Extends `leaves` with `need` further leaves drawn from `cands` in
    // ascending order, then places the block.
    bool try_leaf_sets(int class_idx, Mask in_class, int center, Mask cands, int need,
                       int min_leaf, std::vector<int>& leaves, const std::vector<int>& prev_key) {
        if (timed_out_) return false;
        if (need == 0) return place_block(class_idx, in_class, center, leaves, prev_key);
        Mask iter = cands;
        if (min_leaf >= 0) iter &= ~((bit(min_leaf) << 1) - 1); // only leaves above the last pick
        while (iter) {
            if (__builtin_popcount(iter) < need) return false;
            const int l = __builtin_ctz(iter);
            iter &= iter - 1;
            leaves.push_back(l);
            if (try_leaf_sets(class_idx, in_class, center, leaf_candidates(cands, l), need - 1, l,
                              leaves, prev_key))
                return true;
            leaves.pop_back();
        }
        return false;
    }

    static std::vector<int> key_of(const Star& s) {
        std::vector<int> key{s.center};
        std::vector<int> ls = s.leaves;
        std::sort(ls.begin(), ls.end());
        key.insert(key.end(), ls.begin(), ls.end());
        return key;
    }

    bool place_block(int class_idx, Mask in_class, int center, const std::vector<int>& leaves,
                     const std::vector<int>& prev_key) {
        Star block{center, leaves};
        std::sort(block.leaves.begin(), block.leaves.end());
        // Classes are interchangeable; explore them sorted by their vertex-0
        // block so each unordered solution is visited once.
        if (classes_[class_idx].empty() && !prev_key.empty() && key_of(block) <= prev_key)
            return false;
        if (++nodes_ > budget_) {
            timed_out_ = true;
            return false;
        }

        Mask bits = bit(center);
        for (int l : block.leaves) {
            bits |= bit(l);
            remove_edge(center, l);
        }
        ++centers_used_[center];
        const Mask exhausted_before = exhausted_;

        bool viable = true;
        if (centers_used_[center] == center_quota_) {
            if (adj_[center] & exhausted_) viable = false; // an uncovered edge nobody can center
            exhausted_ |= bit(center);
            // Neighbors feel the new pressure.
            Mask scan = adj_[center];
            while (viable && scan) {
                const int y = __builtin_ctz(scan);
                scan &= scan - 1;
                if (!center_capacity_ok(y)) viable = false;
            }
        }
        const Mask now_in_class = in_class | bits;
        if (viable && now_in_class != full_mask()) viable = class_left_viable(now_in_class);

        classes_[class_idx].push_back(block);
        const bool found = viable && search_class(class_idx, now_in_class, prev_key);

        if (!found) {
            classes_[class_idx].pop_back();
            exhausted_ = exhausted_before;
            --centers_used_[center];
            for (int l : block.leaves) restore_edge(center, l);
        }
        return found;
    }
};

} // namespace detail

// Exhaustive backtracking over edge-disjoint resolution classes. Returns a
// witness decomposition, a proof of nonexistence (search space exhausted), or
// a timeout once the node budget is spent. Timeouts are never reported as
// nonexistence.
inline OracleResult brute_force_urd(int n, int v, long long node_budget = 100'000'000) {
    check_n(n);
    if (v < 2 || v > 32)
        throw std::invalid_argument("oracle supports 2 <= v <= 32");
    if (v % 2 != 0 || v % (n + 1) != 0 || (v - 2) % n != 0)
        return {OracleOutcome::none, std::nullopt, 0};
    return detail::OracleSearch(n, v, node_budget).run();
}

} // namespace urd
