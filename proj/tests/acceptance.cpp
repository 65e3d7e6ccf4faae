// acceptance.cpp — end-to-end acceptance suite. Each criterion prints exactly
// one PASS/FAIL line; the process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "urd/urd.hpp"

using namespace urd;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

// ---- criterion 1: Main Theorem sweep --------------------------------------

void criterion_1() {
    const auto t0 = clock_type::now();
    int instances = 0;
    std::string why;
    bool ok = true;
    for (int n : {3, 5, 7, 9, 11}) {
        for (const Params& p : enumerate_admissible(n, 700)) {
            const ConstructResult res = construct_urd(n, p.v);
            if (!res.ok()) {
                ok = false;
                why = "construct rejected admissible v=" + std::to_string(p.v);
                break;
            }
            if (static_cast<long long>(res.decomposition->star_classes.size()) != p.s) {
                ok = false;
                why = "wrong class count at v=" + std::to_string(p.v);
                break;
            }
            const VerificationReport rep = verify_urd(*res.decomposition);
            if (!rep.ok) {
                ok = false;
                why = "verification failed at n=" + std::to_string(n) +
                      ", v=" + std::to_string(p.v) + ": " + rep.violations.front().witness;
                break;
            }
            ++instances;
        }
        if (!ok) break;
    }
    const double secs = seconds_since(t0);
    if (ok && secs > 10.0) {
        ok = false;
        why = "sweep exceeded the 10 s budget";
    }
    std::ostringstream detail;
    if (ok)
        detail << "constructed and verified all " << instances
               << " admissible instances with n in {3,5,7,9,11}, v <= 700 ("
               << static_cast<int>(secs * 1000) << " ms)";
    else
        detail << why;
    report(1, ok, detail.str());
}

// ---- criterion 2: oracle agreement -----------------------------------------

void criterion_2() {
    bool ok = true;
    std::string why;
    double slowest_small = 0.0, time_320 = 0.0;
    const std::vector<std::pair<int, int>> small{{3, 8}, {5, 12}, {7, 16}, {9, 20}, {11, 24}};
    for (const auto& [n, v] : small) {
        const auto t0 = clock_type::now();
        const OracleResult res = brute_force_urd(n, v);
        const double secs = seconds_since(t0);
        slowest_small = std::max(slowest_small, secs);
        if (res.outcome != OracleOutcome::witness || !verify_urd(*res.decomposition).ok) {
            ok = false;
            why = "no verified witness for (" + std::to_string(n) + "," + std::to_string(v) + ")";
            break;
        }
        const ConstructResult built = construct_urd(n, v);
        if (!built.ok() || !verify_urd(*built.decomposition).ok) {
            ok = false;
            why = "constructed decomposition failed at (" + std::to_string(n) + "," +
                  std::to_string(v) + ")";
            break;
        }
        if (secs > 1.0) {
            ok = false;
            why = "(" + std::to_string(n) + "," + std::to_string(v) + ") exceeded 1 s";
            break;
        }
    }
    if (ok) {
        const auto t0 = clock_type::now();
        const OracleResult res = brute_force_urd(3, 20); // default node budget
        time_320 = seconds_since(t0);
        if (res.outcome != OracleOutcome::witness || !verify_urd(*res.decomposition).ok) {
            ok = false;
            why = "no verified witness for (3,20)";
        } else if (time_320 > 60.0) {
            ok = false;
            why = "(3,20) exceeded 60 s";
        }
    }
    std::ostringstream detail;
    if (ok)
        detail << "verified witnesses for (3,8),(5,12),(7,16),(9,20),(11,24) and (3,20); "
               << "slowest small case " << static_cast<int>(slowest_small * 1000)
               << " ms, (3,20) " << static_cast<int>(time_320 * 1000) << " ms";
    else
        detail << why;
    report(2, ok, detail.str());
}

// ---- criterion 3: necessity -------------------------------------------------

void criterion_3() {
    bool ok = true;
    std::string why;
    int rejected = 0, accepted = 0;
    for (int n : {3, 5}) {
        for (long long v = 1; v <= 200 && ok; ++v) {
            const bool admissible =
                v % (n + 1) == 0 && (v - 2) % n == 0; // v = n(n+1)k' + 2(n+1)
            const ConstructResult res = construct_urd(n, v);
            if (admissible) {
                if (!res.ok() || !verify_urd(*res.decomposition).ok) {
                    ok = false;
                    why = "false rejection or bad output at n=" + std::to_string(n) +
                          ", v=" + std::to_string(v);
                }
                ++accepted;
            } else {
                const Admissibility expect = v % (n + 1) != 0
                                                 ? Admissibility::v_not_multiple_of_n_plus_1
                                                 : Admissibility::v_minus_2_not_multiple_of_n;
                if (res.ok()) {
                    ok = false;
                    why = "false acceptance at n=" + std::to_string(n) + ", v=" + std::to_string(v);
                } else if (res.status != expect) {
                    ok = false;
                    why = "wrong congruence reported at n=" + std::to_string(n) +
                          ", v=" + std::to_string(v);
                }
                ++rejected;
            }
        }
    }
    std::ostringstream detail;
    if (ok)
        detail << "rejected all " << rejected
               << " inadmissible orders v <= 200 for n in {3,5} with the failing congruence; "
               << accepted << " admissible orders accepted";
    else
        detail << why;
    report(3, ok, detail.str());
}

// ---- criterion 4: reproduction of the published 162-vertex arrays ----------

using Row = std::vector<int>;
using Table = std::multiset<Row>;

// The six recorded subarrays for v = 162 as printed (0 marks an empty cell).
// The construction pins the row {55,56,51,52,53} to residue class 3: its five
// differences can only arise from the star centered at vertex 81 == 3 (mod 6),
// so the printed placement under T4 is a typo; placed there, those edges
// would be double-covered while class-3 edges went uncovered and no valid
// decomposition could contain the printed tables. The comparison below uses
// the corrected placement and additionally pins every other printed cell.
const std::vector<Table> printed_tables{
    {{37, 32, 21, 16, 11}, {49, 50, 51, 52, 53}, {67, 80, 0, 0, 0}},
    {{37, 32, 21, 16, 5}, {1, 56, 3, 4, 47}, {67, 80, 0, 0, 0}},
    {{37, 32, 21, 10, 5}, {67, 80, 0, 0, 0}},
    {{37, 32, 15, 10, 5}, {67, 80, 0, 0, 0}},
    {{37, 26, 15, 10, 5}, {55, 56, 51, 52, 53}, {67, 74, 0, 0, 0}},
    {{31, 26, 15, 10, 5}, {61, 74, 0, 0, 0}},
};
const Row misplaced_row{55, 56, 51, 52, 53};

void criterion_4() {
    const Params p = require_params(5, 162);
    auto arrays = record_part1_differences(p, build_almost_factor(p));
    bool ok = true;
    std::string why;

    std::vector<Table> expected = printed_tables;
    expected[4].erase(expected[4].find(misplaced_row));
    expected[3].insert(misplaced_row);

    for (int i = 0; i <= 5 && ok; ++i) {
        Table got;
        for (int r = 0; r < arrays[i].t1_rows; ++r) got.insert(arrays[i].rows[r]);
        if (got != expected[i]) {
            ok = false;
            why = "recorded subarray " + std::to_string(i) + " differs from the published table";
        }
    }
    if (ok) {
        complete_arrays(arrays, p);
        for (const auto& a : arrays) {
            const ArrayCheck chk = verify_balanced_array(a, p);
            if (!chk.ok) {
                ok = false;
                why = "array " + std::to_string(a.residue) + " unbalanced: " + chk.witness;
                break;
            }
        }
    }
    std::ostringstream detail;
    if (ok)
        detail << "all six 162-vertex recorded subarrays match the published tables cell for "
               << "cell (one row placed under class 3, whose center class the printed table "
               << "misstates as 4) and all six completed arrays are balanced";
    else
        detail << why;
    report(4, ok, detail.str());
}

// ---- criterion 5: almost-factor property suite ------------------------------

void criterion_5() {
    bool ok = true;
    std::string why;
    int checked = 0;
    for (int n : {3, 5, 7, 9, 11}) {
        for (int k_prime = 1; k_prime <= 12 && ok; ++k_prime) {
            const long long v = static_cast<long long>(n) * (n + 1) * k_prime + 2 * (n + 1);
            const Params p = require_params(n, v);
            const AlmostStarFactor f = build_almost_factor(p);
            const AlmostFactorReport rep = check_almost_factor(f, p);
            const std::string tag = "n=" + std::to_string(n) + ", k'=" + std::to_string(k_prime);
            if (!rep.ok()) {
                ok = false;
                why = tag + ": " + rep.violations.front();
                break;
            }
            if (p.k_prime_odd()) {
                const int expect_backward = p.k == 0 ? p.q : (p.k <= p.q ? p.w - 1 : 0);
                if (rep.mixed_stars != 1 || rep.mixed_pure_edges != p.q + 1 ||
                    rep.mixed_prime_edges != p.q ||
                    rep.mixed_backward_primes != expect_backward) {
                    ok = false;
                    why = tag + ": mixed-star shape off";
                    break;
                }
            } else if (rep.mixed_stars != 0) {
                ok = false;
                why = tag + ": unexpected mixed star";
                break;
            }
            ++checked;
        }
        if (!ok) break;
    }
    std::ostringstream detail;
    if (ok)
        detail << "all " << checked
               << " almost factors (n in {3,5,7,9,11}, k' in 1..12) re-validated with exact "
               << "mixed-star shapes";
    else
        detail << why;
    report(5, ok, detail.str());
}

// ---- criterion 6: serialization tamper fuzz --------------------------------

enum class Tamper { edge_delete, leaf_swap, class_duplicate };

void criterion_6() {
    bool ok = true;
    std::string why;
    std::mt19937 rng(88031);

    std::vector<Decomposition> pool;
    for (auto [n, v] : {std::pair<int, long long>{3, 8}, {5, 12}, {7, 16}, {3, 20}, {3, 32},
                        {5, 42}}) {
        const ConstructResult res = construct_urd(n, v);
        if (!res.ok()) {
            report(6, false, "pool construction failed");
            return;
        }
        // Round-trip identity on the untampered document.
        if (parse_decomposition(serialize(*res.decomposition)) != *res.decomposition) {
            report(6, false, "round trip is not the identity");
            return;
        }
        pool.push_back(*res.decomposition);
    }

    int done = 0;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        Decomposition d = pool[trial % pool.size()];
        const Tamper op = static_cast<Tamper>(trial % 3);
        auto pick = [&](size_t bound) {
            return std::uniform_int_distribution<size_t>(0, bound - 1)(rng);
        };
        ViolationKind expect{};
        switch (op) {
        case Tamper::edge_delete: {
            StarFactor& f = d.star_classes[pick(d.star_classes.size())];
            Star& s = f.stars[pick(f.stars.size())];
            s.leaves.erase(s.leaves.begin() + pick(s.leaves.size()));
            expect = ViolationKind::malformed_block;
            break;
        }
        case Tamper::leaf_swap: {
            StarFactor& f = d.star_classes[pick(d.star_classes.size())];
            const size_t a = pick(f.stars.size());
            size_t b = pick(f.stars.size());
            while (b == a) b = pick(f.stars.size());
            std::swap(f.stars[a].leaves[pick(f.stars[a].leaves.size())],
                      f.stars[b].leaves[pick(f.stars[b].leaves.size())]);
            expect = ViolationKind::doubly_covered_edge;
            break;
        }
        case Tamper::class_duplicate: {
            d.star_classes.push_back(d.star_classes[pick(d.star_classes.size())]);
            expect = ViolationKind::wrong_class_count;
            break;
        }
        }
        // Tampered documents travel through serialization like real inputs.
        const Decomposition reloaded = parse_decomposition(serialize(d));
        const VerificationReport rep = verify_urd(reloaded);
        if (rep.ok || !rep.has(expect)) {
            ok = false;
            why = "tamper trial " + std::to_string(trial) + " not rejected with the right kind";
        }
        ++done;
    }
    std::ostringstream detail;
    if (ok)
        detail << "all " << done
               << " tampered documents rejected with the expected witness kind; round trips "
               << "are identities";
    else
        detail << why;
    report(6, ok, detail.str());
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    if (failures == 0) std::printf("all acceptance criteria passed\n");
    else std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
