// lift.hpp — expansion of an almost n-star factor on g points into a spanning
// star factor B on v = g(n+1) points, and the cyclic development of B.
//
// Each g-point label x blows up into the block {(n+1)x + i : 0 <= i <= n}. A
// pure edge keeps the same offset i at both ends, so its lifted copies cover
// every edge whose difference is a given multiple of n+1. Prime edges shear
// the offsets, spreading their copies across the non-multiple difference
// classes; the balanced star arrays account for those.
#pragma once

#include <algorithm>
#include <vector>

#include "almost_factor.hpp"
#include "params.hpp"
#include "star.hpp"

namespace urd {

// Pure star (c; l_1..l_n) -> ((n+1)c + i; (n+1)l_j + i).
inline Star lift_pure_star(const Star& s, int i, const Params& p) {
    const int m = p.n + 1;
    Star out;
    out.center = m * s.center + i;
    for (int l : s.leaves) out.leaves.push_back(m * l + i);
    return out;
}

// Prime star with leaves in ascending label order l'_1 < ... < l'_n: the j-th
// leaf takes offset (n+1-j+i) mod (n+1), so the n lifted edges of one copy
// run through every nonzero difference class exactly once.
inline Star lift_prime_star(const Star& s, int i, const Params& p) {
    const int m = p.n + 1;
    Star out;
    out.center = m * s.center + i;
    for (size_t idx = 0; idx < s.leaves.size(); ++idx) {
        const int j = static_cast<int>(idx) + 1;
        out.leaves.push_back(m * s.leaves[idx] + (m - j + i) % m);
    }
    return out;
}

// Mixed star: pure leaves behave as in lift_pure_star; the j-th prime leaf
// (1-based within the prime group, ascending label order) takes offset
// (i + j) mod (n+1) when its edge is forward and (i - j) mod (n+1) when it
// wraps backward.
inline Star lift_mixed_star(const AnnotatedStar& mstar, int i, const Params& p) {
    const int m = p.n + 1;
    Star out;
    out.center = m * mstar.center + i;
    int prime_j = 0;
    for (size_t idx = 0; idx < mstar.leaves.size(); ++idx) {
        const int leaf = mstar.leaves[idx];
        const LabeledDifference& lab = mstar.labels[idx];
        if (!lab.prime) {
            out.leaves.push_back(m * leaf + i);
        } else {
            ++prime_j;
            const int shift = lab.direction == Direction::forward ? i + prime_j : i - prime_j;
            out.leaves.push_back(m * leaf + ((shift % m) + m) % m);
        }
    }
    return out;
}

// Little star L = (c; l_1..l_{t-1}) -> t full n-stars covering the t blocks
// of c and its leaves completely. The case split keeps every produced star's
// differences in distinct nonzero classes.
inline std::vector<Star> lift_little_star(const Star& little, const Params& p) {
    const int m = p.n + 1;
    const int t = p.t;
    const int q = p.q;
    const int c = little.center;
    const std::vector<int>& l = little.leaves; // ascending, l[j-1] is the paper-style l_j
    if (static_cast<int>(l.size()) != t - 1)
        throw std::logic_error("little star has wrong leaf count for t");

    std::vector<Star> out;
    auto rotation = [&](int i) { // centered in block c, sweeping block l_{i+1}
        Star s;
        s.center = m * c + i;
        for (int delta = 1; delta <= p.n; ++delta)
            s.leaves.push_back(m * l[i] + (i + delta) % m);
        std::sort(s.leaves.begin(), s.leaves.end());
        return s;
    };

    if (t == 1) {
        Star fan;
        fan.center = m * c;
        for (int i = 1; i <= p.n; ++i) fan.leaves.push_back(m * c + i);
        out.push_back(std::move(fan));
    } else if (!p.k_prime_odd() || t > q + 2) {
        // Rotations for every leaf block, one closing star.
        for (int i = 0; i <= t - 2; ++i) out.push_back(rotation(i));
        Star close;
        close.center = m * c + (t - 1);
        for (int j = 1; j <= t - 1; ++j) close.leaves.push_back(m * l[j - 1] + (j - 1));
        for (int delta = t; delta <= p.n; ++delta) close.leaves.push_back(m * c + delta);
        std::sort(close.leaves.begin(), close.leaves.end());
        out.push_back(std::move(close));
    } else if (t == q + 2) {
        for (int i = 0; i <= t - 3; ++i) out.push_back(rotation(i));
        Star a;
        a.center = m * c + (t - 2);
        for (int j = 1; j <= t - 2; ++j) a.leaves.push_back(m * l[j - 1] + (j - 1));
        a.leaves.push_back(m * l[t - 2] + (t - 1));
        for (int delta = t; delta <= p.n; ++delta) a.leaves.push_back(m * c + delta);
        std::sort(a.leaves.begin(), a.leaves.end());
        out.push_back(std::move(a));
        Star b;
        b.center = m * c + (q + 1);
        for (int delta = 0; delta <= p.n; ++delta)
            if (delta != q + 1) b.leaves.push_back(m * l[t - 2] + delta);
        out.push_back(std::move(b));
    } else { // 1 < t < q+2, k' odd
        for (int i = 0; i <= t - 3; ++i) out.push_back(rotation(i));
        Star a;
        a.center = m * c + (t - 2);
        for (int j = 1; j <= t - 2; ++j) a.leaves.push_back(m * l[j - 1] + (j - 1));
        for (int delta = t - 1; delta <= q; ++delta) a.leaves.push_back(m * c + delta);
        a.leaves.push_back(m * l[t - 2] + (q + 1));
        for (int delta = q + 2; delta <= p.n; ++delta) a.leaves.push_back(m * c + delta);
        std::sort(a.leaves.begin(), a.leaves.end());
        out.push_back(std::move(a));
        Star b;
        b.center = m * c + (q + 1);
        for (int delta = 0; delta <= p.n; ++delta)
            if (delta != q + 1) b.leaves.push_back(m * l[t - 2] + delta);
        out.push_back(std::move(b));
    }

    // The t stars must cover block c and every leaf block exactly once each.
    std::vector<int> blocks{c};
    blocks.insert(blocks.end(), l.begin(), l.end());
    std::vector<char> seen(static_cast<size_t>(m) * blocks.size(), 0);
    auto mark = [&](int x) {
        for (size_t b = 0; b < blocks.size(); ++b) {
            const int base = m * blocks[b];
            if (x >= base && x < base + m) {
                char& cell = seen[b * m + (x - base)];
                if (cell) throw std::logic_error("little-star lift covers a label twice");
                cell = 1;
                return;
            }
        }
        throw std::logic_error("little-star lift escaped its blocks");
    };
    for (const Star& s : out) {
        if (static_cast<int>(s.leaves.size()) != p.n)
            throw std::logic_error("little-star lift produced a wrong-size star");
        mark(s.center);
        for (int x : s.leaves) mark(x);
    }
    for (char cell : seen)
        if (!cell) throw std::logic_error("little-star lift missed a label");
    return out;
}

// The lifted base factor with its stars grouped by origin, which the balanced
// star arrays need in order to attribute prime differences.
struct BaseFactor {
    StarFactor factor;               // all stars, in a fixed deterministic order
    std::vector<Star> from_pure;     // lifts of P0/P1/P2 (pure differences only)
    std::vector<Star> from_prime;    // lifts of the prime stars, n+1 copies each
    std::vector<Star> from_mixed;    // lifts of the mixed star, n+1 copies
    std::vector<Star> from_little;   // t stars from the little star / isolated vertex
};

inline BaseFactor lift_almost_factor(const AlmostStarFactor& f, const Params& p) {
    BaseFactor base;
    base.factor.v = static_cast<int>(p.v);
    for (const Star& s : f.pure_stars)
        for (int i = 0; i <= p.n; ++i) base.from_pure.push_back(lift_pure_star(s, i, p));
    for (const Star& s : f.prime_stars)
        for (int i = 0; i <= p.n; ++i) base.from_prime.push_back(lift_prime_star(s, i, p));
    if (f.mixed)
        for (int i = 0; i <= p.n; ++i) base.from_mixed.push_back(lift_mixed_star(*f.mixed, i, p));
    if (f.little) {
        base.from_little = lift_little_star(*f.little, p);
    } else if (f.isolated) {
        base.from_little = lift_little_star(Star{*f.isolated, {}}, p);
    }
    auto append = [&](const std::vector<Star>& group) {
        base.factor.stars.insert(base.factor.stars.end(), group.begin(), group.end());
    };
    append(base.from_pure);
    append(base.from_mixed);
    append(base.from_prime);
    append(base.from_little);
    check_star_factor(base.factor, p.n);
    return base;
}

// Applies every lift and assembles the spanning factor on v points.
inline StarFactor build_base_factor(const AlmostStarFactor& f, const Params& p) {
    return lift_almost_factor(f, p).factor;
}

// Translate of a factor by (n+1)j: x -> (x + (n+1)j) mod v. The star order
// and per-star leaf order are preserved.
inline StarFactor develop_factor(const StarFactor& base, int j) {
    const int n = base.stars.empty() ? 0 : static_cast<int>(base.stars.front().leaves.size());
    const int shift = (n + 1) * j;
    StarFactor out;
    out.v = base.v;
    out.stars.reserve(base.stars.size());
    for (const Star& s : base.stars) {
        Star t;
        t.center = (s.center + shift) % base.v;
        for (int l : s.leaves) t.leaves.push_back((l + shift) % base.v);
        out.stars.push_back(std::move(t));
    }
    return out;
}

} // namespace urd
