// star.hpp — block types shared by the construction and verification code.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "params.hpp"

namespace urd {

// One star block: a center joined to each leaf. Leaves are kept in ascending
// label order so every construction is reproducible.
struct Star {
    int center = 0;
    std::vector<int> leaves;

    friend bool operator==(const Star&, const Star&) = default;
};

inline Star make_star(int center, std::vector<int> leaves) {
    std::sort(leaves.begin(), leaves.end());
    return Star{center, std::move(leaves)};
}

// A star whose leaves carry per-edge difference annotations (value, direction,
// pure/prime). Used for the mixed star, whose prime leaves lift differently
// from its pure leaves.
struct AnnotatedStar {
    int center = 0;
    std::vector<int> leaves;
    std::vector<LabeledDifference> labels; // parallel to leaves

    Star plain() const { return Star{center, leaves}; }

    friend bool operator==(const AnnotatedStar&, const AnnotatedStar&) = default;
};

// A spanning collection of stars on v vertices: every vertex appears in
// exactly one star, every star has the same number of leaves.
struct StarFactor {
    int v = 0;
    std::vector<Star> stars;

    friend bool operator==(const StarFactor&, const StarFactor&) = default;
};

// Residue classes V_i = { x : x == i (mod n+1) } partitioning 0..v-1.
struct ResidueClasses {
    int v = 0;
    int n = 0;
    std::vector<std::vector<int>> classes;
};

inline ResidueClasses residue_classes(int v, int n) {
    ResidueClasses rc{v, n, std::vector<std::vector<int>>(n + 1)};
    for (int x = 0; x < v; ++x) rc.classes[x % (n + 1)].push_back(x);
    return rc;
}

// Checks the StarFactor partition invariant: each of 0..v-1 appears exactly
// once, each star has exactly n leaves.
inline void check_star_factor(const StarFactor& f, int n) {
    std::vector<char> seen(f.v, 0);
    auto mark = [&](int x) {
        if (x < 0 || x >= f.v) throw std::logic_error("star factor label out of range");
        if (seen[x]) throw std::logic_error("star factor covers label " + std::to_string(x) + " twice");
        seen[x] = 1;
    };
    for (const Star& s : f.stars) {
        if (static_cast<int>(s.leaves.size()) != n)
            throw std::logic_error("star factor block with wrong leaf count");
        mark(s.center);
        for (int l : s.leaves) mark(l);
    }
    for (int x = 0; x < f.v; ++x)
        if (!seen[x]) throw std::logic_error("star factor misses label " + std::to_string(x));
}

} // namespace urd
