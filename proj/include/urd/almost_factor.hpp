// almost_factor.hpp — construction of an almost n-star factor on g cyclically
// labeled points: a vertex-disjoint family of n-stars leaving exactly t
// exceptional points that form a (t-1)-star (an isolated vertex when t = 1).
//
// Edges are classified by cyclic difference. Every difference value in the
// regime's universe D = {1..d_max} is used exactly once by a pure edge, and at
// most once more by a prime edge, so the lifted factor can account for every
// edge class of the host graph exactly once.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "params.hpp"
#include "star.hpp"

namespace urd {

// Bookkeeping produced alongside the construction. Tests and the self-check
// read these sets; the construction itself never consumes them afterwards.
struct DifferenceLedger {
    int d_max = 0;                    // difference universe D = {1..d_max}
    std::vector<int> d0, d1, d2;      // pure differences used by P0, P1, P2
    std::vector<int> m_pure, m_prime; // mixed-star pure / prime difference values
    std::vector<int> prime_used;      // differences of the greedy tail (P3 and L)
    std::vector<int> a1, a2, b1, b2;  // mixed-star length sets (b1, b2 prime; b1 backward)
    std::optional<int> rho1, rho2;    // mixed-star center, first P2 center
    std::optional<int> z_p0_min;      // smallest length consumed by P0
    std::optional<int> z_d2_max;      // largest length left to P2

    friend bool operator==(const DifferenceLedger&, const DifferenceLedger&) = default;
};

struct AlmostStarFactor {
    int g = 0;
    std::vector<Star> pure_stars;        // P0, P1, P2 (every edge pure)
    std::vector<Star> prime_stars;       // P3 and the k'=2 prime star
    std::optional<AnnotatedStar> mixed;  // M: q+1 pure edges plus q prime edges
    std::optional<Star> little;          // L: t-1 leaves, present when t >= 2
    std::optional<int> isolated;         // present when t == 1
    DifferenceLedger ledger;

    friend bool operator==(const AlmostStarFactor&, const AlmostStarFactor&) = default;
};

// The five construction regimes, keyed on k' parity and the size of k.
enum class AlmostRegime {
    lone_mixed,     // k' = 1: one mixed star with backward primes, one isolated vertex
    backward_mixed, // k' odd, 1 <= k <= q: mixed star with w-1 backward primes
    forward_mixed,  // k' odd, k >= q+1: mixed star with all-forward primes
    star_pair,      // k' = 2: one pure star and one prime star, nothing else
    even_general,   // k' even, k >= 2
};

inline AlmostRegime almost_regime(const Params& p) {
    if (p.k_prime < 1) throw std::invalid_argument("almost factor requires k' >= 1");
    if (p.k_prime_odd()) {
        if (p.k == 0) return AlmostRegime::lone_mixed;
        if (p.k <= p.q) return AlmostRegime::backward_mixed;
        return AlmostRegime::forward_mixed;
    }
    return p.k == 1 ? AlmostRegime::star_pair : AlmostRegime::even_general;
}

// Difference universe bound for the almost factor. For g even the half
// difference g/2 is reserved for the perfect matching of the lifted graph, so
// it is excluded.
inline int almost_d_max(const Params& p) {
    return static_cast<int>(p.k_prime_odd() ? p.mu : p.mu - 1);
}

namespace detail {

class LabelPool {
public:
    explicit LabelPool(int g) {
        for (int x = 0; x < g; ++x) free_.insert(x);
    }
    int take(int x, const char* who) {
        auto it = free_.find(x);
        if (it == free_.end())
            throw std::logic_error(std::string(who) + ": label " + std::to_string(x) +
                                   " already used or out of range");
        free_.erase(it);
        return x;
    }
    int take_smallest(const char* who) {
        if (free_.empty()) throw std::logic_error(std::string(who) + ": no labels left");
        int x = *free_.begin();
        free_.erase(free_.begin());
        return x;
    }
    int take_largest(const char* who) {
        if (free_.empty()) throw std::logic_error(std::string(who) + ": no labels left");
        int x = *free_.rbegin();
        free_.erase(std::prev(free_.end()));
        return x;
    }
    bool empty() const { return free_.empty(); }
    size_t size() const { return free_.size(); }
    const std::set<int>& remaining() const { return free_; }

private:
    std::set<int> free_;
};

// Sorted pool of unused difference values.
class DiffPool {
public:
    DiffPool() = default;
    explicit DiffPool(std::set<int> values) : free_(std::move(values)) {}
    void remove(int d, const char* who) {
        auto it = free_.find(d);
        if (it == free_.end())
            throw std::logic_error(std::string(who) + ": difference " + std::to_string(d) +
                                   " not available");
        free_.erase(it);
    }
    std::vector<int> take_largest(int count, const char* who) {
        if (count < 0 || static_cast<size_t>(count) > free_.size())
            throw std::logic_error(std::string(who) + ": not enough differences left");
        std::vector<int> out;
        for (int i = 0; i < count; ++i) {
            out.push_back(*free_.rbegin());
            free_.erase(std::prev(free_.end()));
        }
        return out; // descending
    }
    size_t size() const { return free_.size(); }
    bool empty() const { return free_.empty(); }
    int largest() const { return *free_.rbegin(); }
    const std::set<int>& remaining() const { return free_; }

private:
    std::set<int> free_;
};

// P1: stars (i-1; j, j-1, ..., j-(n-1)) with j = (mu-w) - n(i-1), for
// i = 1..count. Consumes labels 0..mu-w and covers the differences
// {1..mu-w} minus the multiples of n+1.
inline std::vector<Star> build_p1(const Params& p, int count, LabelPool& pool,
                                  std::vector<int>& d1) {
    std::vector<Star> stars;
    const int n = p.n;
    for (int i = 1; i <= count; ++i) {
        const int center = pool.take(i - 1, "P1 center");
        const int j = static_cast<int>(p.mu) - p.w - n * (i - 1);
        std::vector<int> leaves;
        for (int delta = 0; delta < n; ++delta) {
            leaves.push_back(pool.take(j - delta, "P1 leaf"));
            d1.push_back(j - delta - center);
        }
        stars.push_back(make_star(center, std::move(leaves)));
    }
    std::sort(d1.begin(), d1.end());
    return stars;
}

// One pure star: given center and edge lengths, leaves sit at center + d.
inline Star pure_star_from_lengths(int center, const std::vector<int>& lengths,
                                   LabelPool& pool, const char* who) {
    std::vector<int> leaves;
    for (int d : lengths) leaves.push_back(pool.take(center + d, who));
    return make_star(center, std::move(leaves));
}

inline AnnotatedStar make_annotated(int center, std::vector<std::pair<int, LabeledDifference>> pure,
                                    std::vector<std::pair<int, LabeledDifference>> prime) {
    auto by_label = [](const auto& a, const auto& b) { return a.first < b.first; };
    std::sort(pure.begin(), pure.end(), by_label);
    std::sort(prime.begin(), prime.end(), by_label);
    AnnotatedStar m;
    m.center = center;
    for (const auto& [leaf, lab] : pure) {
        m.leaves.push_back(leaf);
        m.labels.push_back(lab);
    }
    for (const auto& [leaf, lab] : prime) {
        m.leaves.push_back(leaf);
        m.labels.push_back(lab);
    }
    return m;
}

} // namespace detail

struct GreedyTail {
    std::optional<Star> little;
    std::optional<int> isolated;
    std::vector<Star> prime_stars;
    std::vector<int> diffs; // every tail edge difference, ascending
};

// Consumes the exact leftover labels after the pure and mixed stars are
// placed. The little star takes the smallest label as center and the t-1
// largest as leaves (for t = 1 the single largest leftover becomes the
// isolated vertex); each following prime star takes the smallest remaining
// label as center and the n largest as leaves. All resulting differences are
// pairwise distinct forward differences, which the caller re-checks.
inline GreedyTail build_greedy_tail(const std::set<int>& unused, const Params& p) {
    if (static_cast<int>(unused.size() % (p.n + 1)) != p.t)
        throw std::logic_error("greedy tail: leftover size " + std::to_string(unused.size()) +
                               " inconsistent with t = " + std::to_string(p.t));
    std::set<int> free = unused;
    auto take_smallest = [&] {
        int x = *free.begin();
        free.erase(free.begin());
        return x;
    };
    auto take_largest = [&] {
        int x = *free.rbegin();
        free.erase(std::prev(free.end()));
        return x;
    };

    GreedyTail tail;
    if (p.t == 1) {
        tail.isolated = take_largest();
    } else if (p.t >= 2) {
        const int center = take_smallest();
        std::vector<int> leaves;
        for (int i = 0; i < p.t - 1; ++i) leaves.push_back(take_largest());
        for (int l : leaves) tail.diffs.push_back(l - center);
        tail.little = make_star(center, std::move(leaves));
    }
    while (!free.empty()) {
        const int center = take_smallest();
        std::vector<int> leaves;
        for (int i = 0; i < p.n; ++i) leaves.push_back(take_largest());
        for (int l : leaves) tail.diffs.push_back(l - center);
        tail.prime_stars.push_back(make_star(center, std::move(leaves)));
    }

    std::sort(tail.diffs.begin(), tail.diffs.end());
    for (size_t i = 0; i + 1 < tail.diffs.size(); ++i)
        if (tail.diffs[i] == tail.diffs[i + 1])
            throw std::logic_error("greedy tail produced a repeated difference " +
                                   std::to_string(tail.diffs[i]));
    if (!tail.diffs.empty() && tail.diffs.back() > almost_d_max(p))
        throw std::logic_error("greedy tail produced an oversized difference");
    return tail;
}

namespace detail {

inline void attach_tail(AlmostStarFactor& f, GreedyTail&& tail) {
    f.little = std::move(tail.little);
    f.isolated = tail.isolated;
    for (Star& s : tail.prime_stars) f.prime_stars.push_back(std::move(s));
    f.ledger.prime_used = std::move(tail.diffs);
}

// k' = 1 (g = n+2): a single mixed star (0; 1..q+1, then the backward prime
// leaves q+2..2q+1) plus the isolated vertex 2q+2.
inline AlmostStarFactor build_lone_mixed(const Params& p) {
    AlmostStarFactor f;
    f.g = static_cast<int>(p.g);
    f.ledger.d_max = almost_d_max(p);
    LabelPool pool(f.g);

    const int center = pool.take(0, "mixed center");
    std::vector<std::pair<int, LabeledDifference>> pure, prime;
    for (int leaf = 1; leaf <= p.q + 1; ++leaf) {
        pool.take(leaf, "mixed pure leaf");
        pure.push_back({leaf, LabeledDifference{leaf, Direction::forward, false}});
        f.ledger.m_pure.push_back(leaf);
    }
    for (int leaf = p.q + 2; leaf <= 2 * p.q + 1; ++leaf) {
        pool.take(leaf, "mixed prime leaf");
        const int value = f.g - leaf; // wrap-around difference
        prime.push_back({leaf, LabeledDifference{value, Direction::backward, true}});
        f.ledger.m_prime.push_back(value);
    }
    f.mixed = make_annotated(center, std::move(pure), std::move(prime));
    f.ledger.rho1 = center;
    std::sort(f.ledger.m_prime.begin(), f.ledger.m_prime.end());

    attach_tail(f, build_greedy_tail(pool.remaining(), p));
    return f;
}

// k' odd, 1 <= k <= q. Here w = q+2-k, and the mixed star centered at
// mu-w+1 carries the lengths A1 u A2 (pure forward), B1 (prime backward) and
// B2 (prime forward).
inline AlmostStarFactor build_backward_mixed(const Params& p) {
    AlmostStarFactor f;
    f.g = static_cast<int>(p.g);
    f.ledger.d_max = almost_d_max(p);
    const int mu = static_cast<int>(p.mu);
    if (p.w != p.q + 2 - p.k)
        throw std::logic_error("w from its congruence disagrees with q+2-k");

    LabelPool pool(f.g);
    for (Star& s : build_p1(p, p.k, pool, f.ledger.d1)) f.pure_stars.push_back(std::move(s));

    const int center = pool.take_smallest("mixed center");
    if (center != mu - p.w + 1)
        throw std::logic_error("mixed center is not mu-w+1");
    f.ledger.rho1 = center;

    for (int delta = 0; delta <= p.w - 1; ++delta) f.ledger.a1.push_back(mu - delta);
    for (int delta = 1; delta <= p.k - 1; ++delta) f.ledger.a2.push_back((p.n + 1) * delta);
    for (int delta = 0; delta <= p.w - 2; ++delta) f.ledger.b1.push_back(mu - delta);
    for (int delta = 0; delta <= p.q - p.w; ++delta) f.ledger.b2.push_back(mu - p.w - delta);

    std::vector<std::pair<int, LabeledDifference>> pure, prime;
    for (int d : f.ledger.a1) {
        pure.push_back({pool.take(center + d, "mixed pure leaf"),
                        LabeledDifference{d, Direction::forward, false}});
        f.ledger.m_pure.push_back(d);
    }
    for (int d : f.ledger.a2) {
        pure.push_back({pool.take(center + d, "mixed pure leaf"),
                        LabeledDifference{d, Direction::forward, false}});
        f.ledger.m_pure.push_back(d);
    }
    for (int d : f.ledger.b1) { // backward: the leaf lies d before the center, cyclically
        prime.push_back({pool.take(center - d + f.g, "mixed backward leaf"),
                         LabeledDifference{d, Direction::backward, true}});
        f.ledger.m_prime.push_back(d);
    }
    for (int d : f.ledger.b2) {
        prime.push_back({pool.take(center + d, "mixed forward leaf"),
                         LabeledDifference{d, Direction::forward, true}});
        f.ledger.m_prime.push_back(d);
    }
    f.mixed = make_annotated(center, std::move(pure), std::move(prime));
    std::sort(f.ledger.m_pure.begin(), f.ledger.m_pure.end());
    std::sort(f.ledger.m_prime.begin(), f.ledger.m_prime.end());

    attach_tail(f, build_greedy_tail(pool.remaining(), p));
    return f;
}

// Shared by the k >= q+1 odd regime and the k >= 2 even regime: P0 takes the
// n largest unused lengths with forward edges out of the center mu.
inline void build_p0(const Params& p, LabelPool& pool, DiffPool& lengths,
                     AlmostStarFactor& f) {
    std::vector<int> picked = lengths.take_largest(p.n, "P0");
    const int center = pool.take(static_cast<int>(p.mu), "P0 center");
    f.ledger.d0 = picked;
    std::sort(f.ledger.d0.begin(), f.ledger.d0.end());
    f.ledger.z_p0_min = f.ledger.d0.front();
    f.pure_stars.push_back(pure_star_from_lengths(center, picked, pool, "P0 leaf"));
}

// P2: repeatedly center the smallest admissible unused label and attach the n
// largest remaining lengths. `min_center_exclusive` is -1 for the odd regime
// (any unused label) and mu for the even regime (centers above mu only).
inline void build_p2(const Params& p, LabelPool& pool, DiffPool& lengths,
                     int min_center_exclusive, AlmostStarFactor& f) {
    if (lengths.size() % p.n != 0)
        throw std::logic_error("P2 length count " + std::to_string(lengths.size()) +
                               " is not a multiple of n");
    if (lengths.empty()) return;
    f.ledger.z_d2_max = lengths.largest();
    while (!lengths.empty()) {
        int center = -1;
        for (int x : pool.remaining())
            if (x > min_center_exclusive) { center = x; break; }
        if (center < 0) throw std::logic_error("P2: no center available");
        pool.take(center, "P2 center");
        if (!f.ledger.rho2) f.ledger.rho2 = center;
        std::vector<int> picked = lengths.take_largest(p.n, "P2");
        for (int d : picked) f.ledger.d2.push_back(d);
        f.pure_stars.push_back(pure_star_from_lengths(center, picked, pool, "P2 leaf"));
    }
    std::sort(f.ledger.d2.begin(), f.ledger.d2.end());
}

// k' odd, k >= q+1: all prime edges of the mixed star are forward.
inline AlmostStarFactor build_forward_mixed(const Params& p) {
    AlmostStarFactor f;
    f.g = static_cast<int>(p.g);
    f.ledger.d_max = almost_d_max(p);
    const int mu = static_cast<int>(p.mu);

    if ((mu + 1 - p.w) % (p.n + 1) != 0)
        throw std::logic_error("mu+1-w is not a multiple of n+1");
    const int p1_count = (mu + 1 - p.w) / (p.n + 1);

    LabelPool pool(f.g);
    for (Star& s : build_p1(p, p1_count, pool, f.ledger.d1)) f.pure_stars.push_back(std::move(s));

    std::set<int> rest;
    {
        std::set<int> used(f.ledger.d1.begin(), f.ledger.d1.end());
        for (int d = 1; d <= f.ledger.d_max; ++d)
            if (!used.count(d)) rest.insert(d);
    }
    DiffPool lengths(std::move(rest));

    // P0 exists unless the leftover lengths are exactly the mixed star's quota.
    if (static_cast<int>(lengths.size()) > p.q + 1) build_p0(p, pool, lengths, f);

    const int rho1 = pool.take_smallest("mixed center");
    f.ledger.rho1 = rho1;
    const int expected_rho1 =
        (p.w == 1) ? (p.k == p.q + 1 ? mu : mu + 1) : mu - p.w + 1;
    if (rho1 != expected_rho1)
        throw std::logic_error("mixed center " + std::to_string(rho1) +
                               " differs from the expected " + std::to_string(expected_rho1));

    std::vector<std::pair<int, LabeledDifference>> pure, prime;
    for (int d : lengths.take_largest(p.q + 1, "mixed pure lengths")) {
        pure.push_back({pool.take(rho1 + d, "mixed pure leaf"),
                        LabeledDifference{d, Direction::forward, false}});
        f.ledger.m_pure.push_back(d);
    }
    for (int i = 0; i < p.q; ++i) {
        const int leaf = pool.take_largest("mixed prime leaf");
        const int d = leaf - rho1;
        if (d <= 0 || d > f.ledger.d_max)
            throw std::logic_error("mixed prime difference " + std::to_string(d) + " out of range");
        prime.push_back({leaf, LabeledDifference{d, Direction::forward, true}});
        f.ledger.m_prime.push_back(d);
    }
    f.mixed = make_annotated(rho1, std::move(pure), std::move(prime));
    std::sort(f.ledger.m_pure.begin(), f.ledger.m_pure.end());
    std::sort(f.ledger.m_prime.begin(), f.ledger.m_prime.end());

    build_p2(p, pool, lengths, -1, f);
    attach_tail(f, build_greedy_tail(pool.remaining(), p));
    return f;
}

// k' = 2 (g = 2n+2): one pure star covering each difference once and one
// prime star covering each difference again.
inline AlmostStarFactor build_star_pair(const Params& p) {
    AlmostStarFactor f;
    f.g = static_cast<int>(p.g);
    f.ledger.d_max = almost_d_max(p);
    LabelPool pool(f.g);

    const int c1 = pool.take(0, "pure center");
    std::vector<int> leaves1;
    for (int d = 1; d <= p.n; ++d) {
        leaves1.push_back(pool.take(d, "pure leaf"));
        f.ledger.d1.push_back(d);
    }
    f.pure_stars.push_back(make_star(c1, std::move(leaves1)));

    const int c2 = pool.take(p.n + 1, "prime center");
    std::vector<int> leaves2;
    for (int d = 1; d <= p.n; ++d) {
        leaves2.push_back(pool.take(c2 + d, "prime leaf"));
        f.ledger.prime_used.push_back(d);
    }
    f.prime_stars.push_back(make_star(c2, std::move(leaves2)));

    if (!pool.empty()) throw std::logic_error("k'=2 construction left labels unused");
    if (p.t != 0) throw std::logic_error("k'=2 requires t = 0");
    return f;
}

// k' even, k >= 2.
inline AlmostStarFactor build_even_general(const Params& p) {
    AlmostStarFactor f;
    f.g = static_cast<int>(p.g);
    f.ledger.d_max = almost_d_max(p);
    const int mu = static_cast<int>(p.mu);

    if ((mu + 1 - p.w) % (p.n + 1) != 0)
        throw std::logic_error("mu+1-w is not a multiple of n+1");
    const int p1_count = (mu + 1 - p.w) / (p.n + 1);

    LabelPool pool(f.g);
    for (Star& s : build_p1(p, p1_count, pool, f.ledger.d1)) f.pure_stars.push_back(std::move(s));

    std::set<int> rest;
    {
        std::set<int> used(f.ledger.d1.begin(), f.ledger.d1.end());
        for (int d = 1; d <= f.ledger.d_max; ++d)
            if (!used.count(d)) rest.insert(d);
    }
    DiffPool lengths(std::move(rest));

    build_p0(p, pool, lengths, f);
    build_p2(p, pool, lengths, mu, f); // centers strictly above mu
    attach_tail(f, build_greedy_tail(pool.remaining(), p));
    return f;
}

} // namespace detail

// Builds the almost n-star factor on g = v/(n+1) points, dispatching on the
// parameter regime. Requires k' >= 1 (k' = 0 is the closed-form base case).
inline AlmostStarFactor build_almost_factor(const Params& p) {
    switch (almost_regime(p)) {
    case AlmostRegime::lone_mixed: return detail::build_lone_mixed(p);
    case AlmostRegime::backward_mixed: return detail::build_backward_mixed(p);
    case AlmostRegime::forward_mixed: return detail::build_forward_mixed(p);
    case AlmostRegime::star_pair: return detail::build_star_pair(p);
    case AlmostRegime::even_general: return detail::build_even_general(p);
    }
    throw std::logic_error("unreachable");
}

// Re-validation report for an almost factor. Violations are produced by
// recomputing every edge's difference from the raw labels; nothing is trusted
// from the construction except the pure/prime classification of each edge.
struct AlmostFactorReport {
    std::vector<std::string> violations;
    int mixed_stars = 0;
    int little_stars = 0;
    int isolated_vertices = 0;
    int mixed_pure_edges = 0;
    int mixed_prime_edges = 0;
    int mixed_backward_primes = 0;
    int mixed_forward_primes = 0;

    bool ok() const { return violations.empty(); }
};

inline AlmostFactorReport check_almost_factor(const AlmostStarFactor& f, const Params& p) {
    AlmostFactorReport rep;
    auto fail = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };
    const int g = f.g;
    const int d_max = almost_d_max(p);
    if (f.ledger.d_max != d_max) fail("ledger difference bound disagrees with the regime");

    // Vertex partition.
    std::vector<int> uses(g, 0);
    auto touch = [&](int x) {
        if (x < 0 || x >= g) { fail("label " + std::to_string(x) + " out of range"); return; }
        ++uses[x];
    };
    auto touch_star = [&](const Star& s, size_t want_leaves, const char* kind) {
        if (s.leaves.size() != want_leaves)
            fail(std::string(kind) + " star has " + std::to_string(s.leaves.size()) +
                 " leaves, expected " + std::to_string(want_leaves));
        touch(s.center);
        for (int l : s.leaves) touch(l);
    };
    for (const Star& s : f.pure_stars) touch_star(s, p.n, "pure");
    for (const Star& s : f.prime_stars) touch_star(s, p.n, "prime");
    if (f.mixed) touch_star(f.mixed->plain(), p.n, "mixed");
    if (f.little) touch_star(*f.little, p.t - 1, "little");
    if (f.isolated) touch(*f.isolated);
    for (int x = 0; x < g; ++x) {
        if (uses[x] == 0) fail("vertex " + std::to_string(x) + " is uncovered");
        if (uses[x] > 1) fail("vertex " + std::to_string(x) + " appears " +
                              std::to_string(uses[x]) + " times");
    }

    // Component presence for the regime's t.
    rep.mixed_stars = f.mixed ? 1 : 0;
    rep.little_stars = f.little ? 1 : 0;
    rep.isolated_vertices = f.isolated ? 1 : 0;
    if ((p.t >= 2) != f.little.has_value()) fail("little star presence disagrees with t");
    if ((p.t == 1) != f.isolated.has_value()) fail("isolated vertex presence disagrees with t");

    // Recompute all differences.
    std::vector<int> forward_count(d_max + 1, 0), total_count(d_max + 1, 0);
    std::vector<int> pure_count(d_max + 1, 0);
    auto record = [&](int c, int l, bool pure) {
        const auto d = edge_difference(std::min(c, l), std::max(c, l), g);
        if (d.value < 1 || d.value > d_max) {
            fail("edge {" + std::to_string(c) + "," + std::to_string(l) + "} has difference " +
                 std::to_string(d.value) + " outside 1.." + std::to_string(d_max));
            return d;
        }
        ++total_count[d.value];
        if (d.direction == Direction::forward) ++forward_count[d.value];
        if (pure) {
            ++pure_count[d.value];
            if (d.direction == Direction::backward)
                fail("pure edge {" + std::to_string(c) + "," + std::to_string(l) + "} is backward");
        }
        return d;
    };
    for (const Star& s : f.pure_stars)
        for (int l : s.leaves) record(s.center, l, true);

    std::vector<int> tail_prime_values;
    for (const Star& s : f.prime_stars)
        for (int l : s.leaves) tail_prime_values.push_back(record(s.center, l, false).value);
    if (f.little)
        for (int l : f.little->leaves)
            tail_prime_values.push_back(record(f.little->center, l, false).value);

    std::vector<int> mixed_prime_values;
    if (f.mixed) {
        const AnnotatedStar& m = *f.mixed;
        if (m.labels.size() != m.leaves.size()) fail("mixed star annotations out of sync");
        for (size_t i = 0; i < m.leaves.size() && i < m.labels.size(); ++i) {
            const auto d = record(m.center, m.leaves[i], !m.labels[i].prime);
            if (d.value != m.labels[i].value || d.direction != m.labels[i].direction)
                fail("mixed leaf " + std::to_string(m.leaves[i]) +
                     " annotation disagrees with the recomputed difference");
            if (m.labels[i].prime) {
                ++rep.mixed_prime_edges;
                mixed_prime_values.push_back(d.value);
                if (d.direction == Direction::backward) ++rep.mixed_backward_primes;
                else ++rep.mixed_forward_primes;
            } else {
                ++rep.mixed_pure_edges;
            }
        }
        if (rep.mixed_pure_edges != p.q + 1)
            fail("mixed star has " + std::to_string(rep.mixed_pure_edges) +
                 " pure edges, expected q+1 = " + std::to_string(p.q + 1));
        if (rep.mixed_prime_edges != p.q)
            fail("mixed star has " + std::to_string(rep.mixed_prime_edges) +
                 " prime edges, expected q = " + std::to_string(p.q));
    }

    // Lemma-style coverage bullets.
    for (int d = 1; d <= d_max; ++d) {
        if (forward_count[d] == 0)
            fail("difference " + std::to_string(d) + " never appears as a forward edge");
        if (total_count[d] > 2)
            fail("difference " + std::to_string(d) + " has multiplicity " +
                 std::to_string(total_count[d]));
        if (pure_count[d] != 1)
            fail("difference " + std::to_string(d) + " is covered " +
                 std::to_string(pure_count[d]) + " times by pure edges");
    }

    // All prime differences pairwise distinct.
    {
        std::vector<int> all = tail_prime_values;
        all.insert(all.end(), mixed_prime_values.begin(), mixed_prime_values.end());
        std::sort(all.begin(), all.end());
        for (size_t i = 0; i + 1 < all.size(); ++i)
            if (all[i] == all[i + 1])
                fail("prime difference " + std::to_string(all[i]) + " repeats");
    }

    // Regime-specific mixed-star direction pattern.
    switch (almost_regime(p)) {
    case AlmostRegime::lone_mixed:
        if (!f.mixed) fail("k'=1 regime requires a mixed star");
        if (rep.mixed_forward_primes != 0) fail("k'=1 mixed star must have only backward primes");
        break;
    case AlmostRegime::backward_mixed:
        if (!f.mixed) fail("regime requires a mixed star");
        if (rep.mixed_backward_primes != p.w - 1 ||
            rep.mixed_forward_primes != p.q - (p.w - 1))
            fail("mixed star direction split is " + std::to_string(rep.mixed_backward_primes) +
                 " backward / " + std::to_string(rep.mixed_forward_primes) +
                 " forward, expected " + std::to_string(p.w - 1) + " / " +
                 std::to_string(p.q - (p.w - 1)));
        break;
    case AlmostRegime::forward_mixed:
        if (!f.mixed) fail("regime requires a mixed star");
        if (rep.mixed_backward_primes != 0) fail("mixed star primes must all be forward");
        break;
    case AlmostRegime::star_pair:
    case AlmostRegime::even_general:
        if (f.mixed) fail("even k' regime must not have a mixed star");
        break;
    }

    return rep;
}

} // namespace urd
