// star_arrays.hpp — balanced star arrays, the factors they generate, and the
// end-to-end construction of a decomposition of K_v into one perfect matching
// and s spanning star factors.
//
// For each residue class i mod n+1 an array T_i partitions the difference set
// D' (all differences not divisible by n+1). Column j holds only differences
// congruent to j. The rows recorded from the lifted base factor form T_i^1;
// the completion rows T_i^2 each generate one further star factor by cyclic
// development.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "almost_factor.hpp"
#include "lift.hpp"
#include "params.hpp"
#include "star.hpp"

namespace urd {

// Empty-cell marker inside array rows (valid differences are >= 1).
inline constexpr int kEmptyCell = 0;

struct BalancedStarArray {
    int residue = 0;  // class index i
    int columns = 0;  // n
    int t1_rows = 0;  // rows[0..t1_rows) were recorded from Part I
    std::vector<std::vector<int>> rows;
    std::vector<int> full_diff_set; // D', ascending

    friend bool operator==(const BalancedStarArray&, const BalancedStarArray&) = default;
};

// The finished decomposition: one perfect matching plus s star classes.
struct Decomposition {
    int v = 0;
    int n = 0;
    std::vector<std::pair<int, int>> one_factor;
    std::vector<StarFactor> star_classes;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// D' = { d in 1..(v-2)/2 : d != 0 (mod n+1) }. The half difference v/2 is
// consumed by the matching and every multiple of n+1 below it by the lifted
// pure edges, so these are exactly the differences the arrays must cover.
// The same set serves every residue class.
inline std::vector<int> build_difference_universe(const Params& p) {
    std::vector<int> out;
    const long long top = (p.v - 2) / 2;
    for (long long d = 1; d <= top; ++d)
        if (d % (p.n + 1) != 0) out.push_back(static_cast<int>(d));
    return out;
}

namespace detail {

// Difference and accounting class of one star edge in K_v. An edge {a, b}
// covers the pair {x, x+d mod v} whose tail x satisfies x + d == other end;
// the row the edge is recorded in is the tail's residue class.
struct RecordedEdge {
    int diff = 0;
    int column = 0; // diff mod (n+1), 1..n
    int table = 0;  // tail residue class
};

inline RecordedEdge record_edge(int center, int leaf, const Params& p) {
    const int v = static_cast<int>(p.v);
    const int gap = ((leaf - center) % v + v) % v;
    if (gap == 0) throw std::logic_error("degenerate star edge");
    RecordedEdge e;
    if (2 * gap < v) {
        e.diff = gap;
        e.table = center % (p.n + 1);
    } else if (2 * gap > v) {
        e.diff = v - gap;
        e.table = leaf % (p.n + 1);
    } else {
        throw std::logic_error("star edge uses the matching difference v/2");
    }
    e.column = e.diff % (p.n + 1);
    return e;
}

inline std::vector<BalancedStarArray> record_from_base(const Params& p, const BaseFactor& base) {
    const int n = p.n;
    std::vector<BalancedStarArray> arrays(n + 1);
    for (int i = 0; i <= n; ++i) {
        arrays[i].residue = i;
        arrays[i].columns = n;
        arrays[i].full_diff_set = build_difference_universe(p);
    }

    // Lifted pure edges must land on the multiples of n+1; they are what the
    // developed base factor accounts for, so they never enter the arrays.
    for (const Star& s : base.from_pure)
        for (int l : s.leaves) {
            const RecordedEdge e = record_edge(s.center, l, p);
            if (e.column != 0)
                throw std::logic_error("pure lift produced difference " + std::to_string(e.diff) +
                                       " not divisible by n+1");
        }

    // Prime-star and little-star lifts contribute one full row each, all of
    // whose edges share the star's residue class.
    auto full_row = [&](const Star& s, const char* kind) {
        std::vector<int> row(n, kEmptyCell);
        int table = -1;
        for (int l : s.leaves) {
            const RecordedEdge e = record_edge(s.center, l, p);
            if (e.column == 0)
                throw std::logic_error(std::string(kind) + " lift produced a pure-class difference");
            if (table < 0) table = e.table;
            if (table != e.table)
                throw std::logic_error(std::string(kind) + " lift scattered across residue classes");
            if (row[e.column - 1] != kEmptyCell)
                throw std::logic_error(std::string(kind) + " lift repeated column " +
                                       std::to_string(e.column));
            row[e.column - 1] = e.diff;
        }
        arrays[table].rows.push_back(std::move(row));
    };
    for (const Star& s : base.from_prime) full_row(s, "prime star");
    for (const Star& s : base.from_little) full_row(s, "little star");

    // The mixed star's prime edges scatter: a backward leaf is recorded in
    // the table of its own residue class, not the center's. Across the n+1
    // copies these entries assemble into one partial row per table.
    if (!base.from_mixed.empty()) {
        std::vector<std::vector<int>> mixed_rows(n + 1, std::vector<int>(n, kEmptyCell));
        for (const Star& s : base.from_mixed)
            for (int l : s.leaves) {
                const RecordedEdge e = record_edge(s.center, l, p);
                if (e.column == 0) continue; // a pure edge of the mixed star
                if (mixed_rows[e.table][e.column - 1] != kEmptyCell)
                    throw std::logic_error("mixed lift repeated a cell in table " +
                                           std::to_string(e.table));
                mixed_rows[e.table][e.column - 1] = e.diff;
            }
        for (int i = 0; i <= n; ++i) {
            int filled = 0;
            for (int c = 0; c < n; ++c)
                if (mixed_rows[i][c] != kEmptyCell) ++filled;
            if (filled != p.q)
                throw std::logic_error("mixed row of table " + std::to_string(i) + " has " +
                                       std::to_string(filled) + " entries, expected q");
            arrays[i].rows.push_back(std::move(mixed_rows[i]));
        }
    }

    for (auto& a : arrays) a.t1_rows = static_cast<int>(a.rows.size());
    return arrays;
}

} // namespace detail

// Records the differences covered by the non-pure stars of the lifted base
// factor, one partial array per residue class (the T^1 subarrays).
inline std::vector<BalancedStarArray> record_part1_differences(const Params& p,
                                                               const AlmostStarFactor& almost) {
    return detail::record_from_base(p, lift_almost_factor(almost, p));
}

// Fills each array with T^2 rows: per column, the unused differences of that
// congruence class in ascending order, row by row. Throws if the leftover
// counts cannot form full rows, which would mean the recording step missed or
// duplicated a difference.
inline void complete_arrays(std::vector<BalancedStarArray>& arrays, const Params& p) {
    for (BalancedStarArray& a : arrays) {
        const int n = a.columns;
        std::set<int> universe(a.full_diff_set.begin(), a.full_diff_set.end());
        std::vector<std::set<int>> remaining(n + 1);
        for (int d : a.full_diff_set) remaining[d % (p.n + 1)].insert(d);
        for (const auto& row : a.rows)
            for (int c = 0; c < n; ++c) {
                const int d = row[c];
                if (d == kEmptyCell) continue;
                if (!universe.count(d))
                    throw std::logic_error("recorded difference " + std::to_string(d) +
                                           " is outside the universe");
                if (d % (p.n + 1) != c + 1)
                    throw std::logic_error("recorded difference " + std::to_string(d) +
                                           " sits in column " + std::to_string(c + 1));
                if (!remaining[c + 1].erase(d))
                    throw std::logic_error("difference " + std::to_string(d) +
                                           " recorded twice in table " + std::to_string(a.residue));
            }
        const size_t per_column = remaining[1].size();
        for (int c = 1; c <= n; ++c)
            if (remaining[c].size() != per_column)
                throw std::logic_error("table " + std::to_string(a.residue) +
                                       " column counts are imbalanced");
        std::vector<std::vector<int>> cols(n);
        for (int c = 1; c <= n; ++c) cols[c - 1].assign(remaining[c].begin(), remaining[c].end());
        for (size_t r = 0; r < per_column; ++r) {
            std::vector<int> row(n);
            for (int c = 0; c < n; ++c) row[c] = cols[c][r];
            a.rows.push_back(std::move(row));
        }
    }
}

// One star factor per T^2 row: base star (i; i+d_1, ..., i+d_n) developed by
// steps of n+1 around the whole cycle, g stars in all. The column congruences
// make the translates vertex-disjoint and spanning.
inline std::vector<StarFactor> part2_factors(const std::vector<BalancedStarArray>& arrays,
                                             const Params& p) {
    const int v = static_cast<int>(p.v);
    const int m = p.n + 1;
    const int g = static_cast<int>(p.g);
    std::vector<StarFactor> out;
    for (const BalancedStarArray& a : arrays) {
        for (size_t r = a.t1_rows; r < a.rows.size(); ++r) {
            StarFactor f;
            f.v = v;
            for (int j = 0; j < g; ++j) {
                Star s;
                s.center = (a.residue + m * j) % v;
                for (int d : a.rows[r]) s.leaves.push_back((s.center + d) % v);
                f.stars.push_back(std::move(s));
            }
            out.push_back(std::move(f));
        }
    }
    return out;
}

// Closed-form decomposition for v = 2(n+1): the matching pairs antipodal
// vertices, and class i holds the two stars fanning out of i and i+n+1.
inline Decomposition base_case(const Params& p) {
    if (p.k_prime != 0)
        throw std::invalid_argument("base case requires v = 2(n+1)");
    const int v = static_cast<int>(p.v);
    const int n = p.n;
    Decomposition d;
    d.v = v;
    d.n = n;
    for (int i = 0; i <= n; ++i) d.one_factor.push_back({i, i + n + 1});
    for (int i = 0; i <= n; ++i) {
        StarFactor f;
        f.v = v;
        Star s1{i, {}};
        for (int delta = 1; delta <= n; ++delta) s1.leaves.push_back((i + delta) % v);
        Star s2{(i + n + 1) % v, {}};
        for (int delta = 1; delta <= n; ++delta) s2.leaves.push_back((i + n + 1 + delta) % v);
        f.stars.push_back(std::move(s1));
        f.stars.push_back(std::move(s2));
        d.star_classes.push_back(std::move(f));
    }
    return d;
}

struct ConstructResult {
    std::optional<Decomposition> decomposition;
    Admissibility status = Admissibility::admissible;

    bool ok() const { return decomposition.has_value(); }
};

// End-to-end construction. Rejects inadmissible (n, v) with the failing
// congruence; otherwise the result always satisfies the full decomposition
// contract (the verifier is the independent check of that claim).
inline ConstructResult construct_urd(int n, long long v) {
    ParamsResult pr = derive_params(n, v);
    if (!pr.ok()) return {std::nullopt, pr.status};
    const Params& p = *pr.params;
    if (v > (1LL << 30))
        throw std::invalid_argument("v too large for in-memory construction");

    if (p.k_prime == 0) return {base_case(p), Admissibility::admissible};

    const AlmostStarFactor almost = build_almost_factor(p);
    const BaseFactor base = lift_almost_factor(almost, p);

    Decomposition d;
    d.v = static_cast<int>(p.v);
    d.n = p.n;
    for (int i = 0; i < d.v / 2; ++i) d.one_factor.push_back({i, i + d.v / 2});
    for (int j = 0; j < static_cast<int>(p.g); ++j)
        d.star_classes.push_back(develop_factor(base.factor, j));

    std::vector<BalancedStarArray> arrays = detail::record_from_base(p, base);
    complete_arrays(arrays, p);
    for (StarFactor& f : part2_factors(arrays, p)) d.star_classes.push_back(std::move(f));

    if (static_cast<long long>(d.star_classes.size()) != p.s)
        throw std::logic_error("constructed " + std::to_string(d.star_classes.size()) +
                               " star classes, expected " + std::to_string(p.s));
    return {std::move(d), Admissibility::admissible};
}

} // namespace urd
