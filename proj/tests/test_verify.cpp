#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "urd/star_arrays.hpp"
#include "urd/verify.hpp"

using namespace urd;

namespace {

Decomposition relabel(const Decomposition& d, const std::vector<int>& perm) {
    Decomposition out;
    out.v = d.v;
    out.n = d.n;
    for (const auto& [u, x] : d.one_factor) out.one_factor.push_back({perm[u], perm[x]});
    for (const StarFactor& f : d.star_classes) {
        StarFactor g;
        g.v = f.v;
        for (const Star& s : f.stars) {
            Star t;
            t.center = perm[s.center];
            for (int l : s.leaves) t.leaves.push_back(perm[l]);
            g.stars.push_back(std::move(t));
        }
        out.star_classes.push_back(std::move(g));
    }
    return out;
}

} // namespace

TEST_CASE("verifier accepts the closed-form base case") {
    const Decomposition d = base_case(require_params(3, 8));
    const VerificationReport rep = verify_urd(d);
    CHECK(rep.ok);
    long long total = 0;
    for (const auto& [observed, expected] : rep.edge_census) {
        CHECK(observed == expected);
        total += observed;
    }
    CHECK(total == 8 * 7 / 2);
}

TEST_CASE("edge census of a large instance") {
    const ConstructResult res = construct_urd(5, 162);
    REQUIRE(res.ok());
    const VerificationReport rep = verify_urd(*res.decomposition);
    CHECK(rep.ok);
    long long total = 0;
    for (const auto& [observed, expected] : rep.edge_census) total += observed;
    CHECK(total == 162LL * 161 / 2);
}

TEST_CASE("deleting an edge yields an uncovered witness") {
    Decomposition d = base_case(require_params(3, 8));
    d.star_classes[0].stars[0].leaves.pop_back();
    const VerificationReport rep = verify_urd(d);
    CHECK_FALSE(rep.ok);
    CHECK(rep.has(ViolationKind::uncovered_edge));
    CHECK(rep.has(ViolationKind::malformed_block));
}

TEST_CASE("swapping a leaf across stars double-covers an edge") {
    Decomposition d = base_case(require_params(3, 8));
    // Swap one leaf between the two stars of class 0.
    std::swap(d.star_classes[0].stars[0].leaves[0], d.star_classes[0].stars[1].leaves[0]);
    const VerificationReport rep = verify_urd(d);
    CHECK_FALSE(rep.ok);
    CHECK(rep.has(ViolationKind::doubly_covered_edge));
    CHECK(rep.has(ViolationKind::uncovered_edge));
}

TEST_CASE("duplicating a class is a wrong class count") {
    Decomposition d = base_case(require_params(3, 8));
    d.star_classes.push_back(d.star_classes.front());
    const VerificationReport rep = verify_urd(d);
    CHECK_FALSE(rep.ok);
    CHECK(rep.has(ViolationKind::wrong_class_count));
    CHECK(rep.has(ViolationKind::doubly_covered_edge));
}

TEST_CASE("breaking the matching is reported") {
    Decomposition d = base_case(require_params(3, 8));
    d.one_factor[0] = d.one_factor[1];
    const VerificationReport rep = verify_urd(d);
    CHECK_FALSE(rep.ok);
    CHECK(rep.has(ViolationKind::not_a_matching));
}

TEST_CASE("a class that misses a vertex is non-spanning") {
    Decomposition d = base_case(require_params(3, 8));
    // Center a block on a vertex that already appears as a leaf elsewhere in
    // the class, leaving another vertex untouched.
    d.star_classes[1].stars[1].leaves = {0, 1, 3};
    const VerificationReport rep = verify_urd(d);
    CHECK_FALSE(rep.ok);
    CHECK(rep.has(ViolationKind::non_spanning_class));
}

TEST_CASE("verification is invariant under relabeling") {
    const ConstructResult res = construct_urd(3, 20);
    REQUIRE(res.ok());
    std::vector<int> perm(20);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(verify_urd(relabel(*res.decomposition, perm)).ok);
    }
}

TEST_CASE("balanced-array checker pinpoints defects") {
    const Params p = require_params(5, 162);
    auto arrays = record_part1_differences(p, build_almost_factor(p));
    complete_arrays(arrays, p);
    BalancedStarArray a = arrays[0];
    CHECK(verify_balanced_array(a, p).ok);

    SECTION("a value in the wrong column") {
        // 37 belongs to column 1 (37 == 1 mod 6); write it into column 2.
        REQUIRE(a.rows[0][0] == 37);
        a.rows[0][1] = 37;
        const ArrayCheck chk = verify_balanced_array(a, p);
        CHECK_FALSE(chk.ok);
        CHECK(chk.witness.find("37 is not congruent to 2") != std::string::npos);
    }
    SECTION("a duplicated difference") {
        // Overwrite another column-1 cell with 37, so 37 appears twice and
        // the overwritten value never appears.
        REQUIRE(a.rows[3][0] == 1);
        a.rows[3][0] = 37;
        CHECK_FALSE(verify_balanced_array(a, p).ok);
    }
    SECTION("an empty completion cell") {
        a.rows.back()[2] = kEmptyCell;
        CHECK_FALSE(verify_balanced_array(a, p).ok);
    }
}

TEST_CASE("oracle finds witnesses at tiny orders") {
    const OracleResult r8 = brute_force_urd(3, 8);
    REQUIRE(r8.outcome == OracleOutcome::witness);
    CHECK(verify_urd(*r8.decomposition).ok);

    const OracleResult r12 = brute_force_urd(5, 12);
    REQUIRE(r12.outcome == OracleOutcome::witness);
    CHECK(r12.decomposition->star_classes.size() == 6);
    CHECK(verify_urd(*r12.decomposition).ok);
}

TEST_CASE("oracle separates nonexistence from timeout") {
    CHECK(brute_force_urd(3, 6).outcome == OracleOutcome::none);
    CHECK(brute_force_urd(3, 12).outcome == OracleOutcome::none); // 3 does not divide 10
    const OracleResult tiny_budget = brute_force_urd(3, 20, 100);
    CHECK(tiny_budget.outcome == OracleOutcome::timeout);
    CHECK_FALSE(tiny_budget.decomposition.has_value());
    CHECK_THROWS_AS(brute_force_urd(3, 40), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_urd(2, 8), std::invalid_argument);
}

TEST_CASE("oracle and constructor agree up to v = 24") {
    for (int n : {3, 5, 7, 9, 11}) {
        for (int v = 2; v <= 24; v += 2) {
            const OracleResult oracle = brute_force_urd(n, v);
            REQUIRE(oracle.outcome != OracleOutcome::timeout);
            const bool constructed = derive_params(n, v).ok();
            INFO("n=" << n << " v=" << v);
            CHECK((oracle.outcome == OracleOutcome::witness) == constructed);
            if (constructed) {
                const ConstructResult res = construct_urd(n, v);
                REQUIRE(res.ok());
                CHECK(verify_urd(*res.decomposition).ok);
                CHECK(verify_urd(*oracle.decomposition).ok);
            }
        }
    }
}
