#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "urd/lift.hpp"

using namespace urd;

namespace {

std::multiset<int> leaf_set(const Star& s) { return {s.leaves.begin(), s.leaves.end()}; }

} // namespace

TEST_CASE("pure star lift adds a constant offset per copy") {
    const Params p3 = require_params(3, 20);
    const Star s{0, {1, 2, 3}};
    const Star lifted = lift_pure_star(s, 1, p3);
    CHECK(lifted.center == 1);
    CHECK(leaf_set(lifted) == std::multiset<int>{5, 9, 13});
    const Star zero = lift_pure_star(s, 0, p3);
    CHECK(zero.center == 0);
    CHECK(leaf_set(zero) == std::multiset<int>{4, 8, 12});

    const Params p5 = require_params(5, 42);
    const Star big = lift_pure_star(Star{0, {1, 2, 3, 4, 5}}, 2, p5);
    CHECK(big.center == 2);
    CHECK(leaf_set(big) == std::multiset<int>{8, 14, 20, 26, 32});
}

TEST_CASE("prime star lift shears offsets down the leaf list") {
    const Params p = require_params(3, 32);
    const Star s{4, {5, 6, 7}};
    const Star p0 = lift_prime_star(s, 0, p);
    CHECK(p0.center == 16);
    CHECK(p0.leaves == std::vector<int>{23, 26, 29});
    const Star p1 = lift_prime_star(s, 1, p);
    CHECK(p1.center == 17);
    CHECK(p1.leaves == std::vector<int>{20, 27, 30});
}

TEST_CASE("mixed star lift honours backward annotations") {
    const Params p = require_params(5, 42);
    AnnotatedStar m;
    m.center = 0;
    m.leaves = {1, 2, 3, 4, 5};
    m.labels = {
        {1, Direction::forward, false},
        {2, Direction::forward, false},
        {3, Direction::forward, false},
        {3, Direction::backward, true},
        {2, Direction::backward, true},
    };
    const Star m0 = lift_mixed_star(m, 0, p);
    CHECK(m0.center == 0);
    CHECK(m0.leaves == std::vector<int>{6, 12, 18, 29, 34});
    const Star m1 = lift_mixed_star(m, 1, p);
    CHECK(m1.center == 1);
    CHECK(m1.leaves == std::vector<int>{7, 13, 19, 24, 35});
}

TEST_CASE("isolated vertex lifts to a single fan") {
    const Params p = require_params(5, 42); // t = 1
    const std::vector<Star> stars = lift_little_star(Star{6, {}}, p);
    REQUIRE(stars.size() == 1);
    CHECK(stars[0].center == 36);
    CHECK(stars[0].leaves == std::vector<int>{37, 38, 39, 40, 41});
}

TEST_CASE("n=3, t=3 little star lifts to the fixed triple") {
    const Params p = require_params(3, 44); // g = 11, t = 3, q = 1
    REQUIRE(p.t == 3);
    const std::vector<Star> stars = lift_little_star(Star{0, {1, 2}}, p);
    REQUIRE(stars.size() == 3);
    CHECK(stars[0].center == 0);
    CHECK(leaf_set(stars[0]) == std::multiset<int>{5, 6, 7});
    CHECK(stars[1].center == 1);
    CHECK(leaf_set(stars[1]) == std::multiset<int>{3, 4, 10});
    CHECK(stars[2].center == 2);
    CHECK(leaf_set(stars[2]) == std::multiset<int>{8, 9, 11});
}

TEST_CASE("t above q+2 uses rotations plus one closing star") {
    const Params p = require_params(5, 102); // t = 5, q = 2
    REQUIRE(p.t == 5);
    const std::vector<Star> stars = lift_little_star(Star{7, {8, 9, 10, 11}}, p);
    REQUIRE(stars.size() == 5);
    CHECK(stars[4].center == 46);
    CHECK(leaf_set(stars[4]) == std::multiset<int>{47, 48, 55, 62, 69});
    // The five stars cover the five blocks exactly; lift_little_star already
    // throws on any gap, so reaching this point is the assertion.
}

TEST_CASE("little-star lift rejects inconsistent input") {
    const Params p = require_params(5, 102); // t = 5
    CHECK_THROWS_AS(lift_little_star(Star{7, {8, 9}}, p), std::logic_error);
}

TEST_CASE("base factors cover every vertex exactly once") {
    struct Case {
        int n;
        long long v;
        size_t stars;
    };
    for (const Case c : {Case{3, 32, 8}, Case{3, 20, 5}, Case{5, 162, 27}}) {
        const Params p = require_params(c.n, c.v);
        const StarFactor base = build_base_factor(build_almost_factor(p), p);
        CHECK(base.stars.size() == c.stars);
        CHECK_NOTHROW(check_star_factor(base, p.n));
    }
}

TEST_CASE("lifted edge differences split by origin") {
    const Params p = require_params(5, 162);
    const BaseFactor base = lift_almost_factor(build_almost_factor(p), p);
    const int m = p.n + 1;
    auto diff_of = [&](int a, int b) {
        const int u = std::min(a, b), x = std::max(a, b);
        return edge_difference(u, x, p.v).value;
    };
    for (const Star& s : base.from_pure)
        for (int l : s.leaves) CHECK(diff_of(s.center, l) % m == 0);
    for (const Star& s : base.from_prime)
        for (int l : s.leaves) CHECK(diff_of(s.center, l) % m != 0);
    // Of the mixed star's edges, q+1 per copy land on multiples of n+1 and q
    // per copy never do.
    int pure_edges = 0, prime_edges = 0;
    for (const Star& s : base.from_mixed)
        for (int l : s.leaves) (diff_of(s.center, l) % m == 0 ? pure_edges : prime_edges)++;
    CHECK(pure_edges == (p.q + 1) * m);
    CHECK(prime_edges == p.q * m);
}

TEST_CASE("development translates labels cyclically") {
    const Params p = require_params(3, 20);
    StarFactor base;
    base.v = 20;
    base.stars = {Star{0, {12, 8, 4}}, Star{1, {5, 9, 13}}, Star{2, {6, 10, 14}},
                  Star{3, {7, 11, 15}}, Star{16, {17, 18, 19}}};
    const StarFactor same = develop_factor(base, 0);
    CHECK(same.stars == base.stars);
    const StarFactor shifted = develop_factor(base, 1);
    CHECK(shifted.stars[0] == Star{4, {16, 12, 8}});

    // Translation equivariance at the label level.
    const StarFactor ab = develop_factor(develop_factor(base, 2), 4);
    const StarFactor direct = develop_factor(base, (2 + 4) % static_cast<int>(p.g));
    CHECK(ab.stars == direct.stars);
}

TEST_CASE("the g translates cover the pure difference classes exactly once") {
    for (auto [n, v] : {std::pair<int, long long>{3, 20}, {5, 42}, {3, 32}}) {
        const Params p = require_params(n, v);
        const StarFactor base = build_base_factor(build_almost_factor(p), p);
        std::map<std::pair<int, int>, int> count;
        for (int j = 0; j < static_cast<int>(p.g); ++j) {
            const StarFactor t = develop_factor(base, j);
            for (const Star& s : t.stars)
                for (int l : s.leaves)
                    ++count[{std::min(s.center, l), std::max(s.center, l)}];
        }
        // No edge is covered twice across translates.
        for (const auto& [edge, c] : count) CHECK(c == 1);
        // Every edge whose difference is a positive multiple of n+1 is hit.
        for (int u = 0; u < v; ++u)
            for (int x = u + 1; x < v; ++x) {
                const int d = edge_difference(u, x, v).value;
                if (d % (n + 1) == 0 && 2 * d != v)
                    CHECK(count.count({u, x}) == 1);
            }
    }
}
