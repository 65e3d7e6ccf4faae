// params.hpp — admissibility and derived parameters for decomposing K_v into
// one perfect matching plus spanning star factors with n leaves per star.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace urd {

// Reason a vertex count v is rejected for a given star size n. The two
// congruences (n+1) | v and n | (v-2) together are equivalent to
// v = n(n+1)k' + 2(n+1) for some integer k' >= 0.
enum class Admissibility {
    admissible,
    v_not_multiple_of_n_plus_1,  // (n+1) does not divide v
    v_minus_2_not_multiple_of_n, // n does not divide v-2
};

inline const char* to_string(Admissibility a) {
    switch (a) {
    case Admissibility::admissible: return "admissible";
    case Admissibility::v_not_multiple_of_n_plus_1: return "v is not a multiple of n+1";
    case Admissibility::v_minus_2_not_multiple_of_n: return "v-2 is not a multiple of n";
    }
    return "?";
}

// All derived quantities for one admissible instance (n, v).
//
//   v  = n(n+1)k' + 2(n+1)     vertex count of the host graph
//   g  = v/(n+1)               points of the cyclically labeled quotient
//   k  = k'/2 rounded down     (k' = 2k+1 odd, k' = 2k even)
//   q  = (n-1)/2
//   mu = largest cyclic difference on g points: (g-1)/2 for g odd, g/2 for g even
//   w  in 1..n+1 with mu+1 == w (mod n+1), picking n+1 instead of 0
//   t  = g mod (n+1), the number of exceptional points of an almost factor
//   s  = (v-2)(n+1)/(2n)       number of star factors in the decomposition
struct Params {
    int n = 0;
    int k_prime = 0;
    long long v = 0;
    long long g = 0;
    int k = 0;
    int q = 0;
    long long mu = 0;
    int w = 0;
    int t = 0;
    long long s = 0;

    bool k_prime_odd() const { return k_prime % 2 != 0; }
};

struct ParamsResult {
    std::optional<Params> params;
    Admissibility status = Admissibility::admissible;

    bool ok() const { return params.has_value(); }
};

inline void check_n(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("n must be an odd integer >= 3, got " + std::to_string(n));
}

// Derives the full parameter set, or reports which congruence fails.
// Any positive v satisfying both congruences is automatically >= 2(n+1).
inline ParamsResult derive_params(int n, long long v) {
    check_n(n);
    if (v < 1) throw std::invalid_argument("v must be positive");
    if (v % (n + 1) != 0) return {std::nullopt, Admissibility::v_not_multiple_of_n_plus_1};
    if ((v - 2) % n != 0) return {std::nullopt, Admissibility::v_minus_2_not_multiple_of_n};

    Params p;
    p.n = n;
    p.v = v;
    p.k_prime = static_cast<int>((v - 2LL * (n + 1)) / (static_cast<long long>(n) * (n + 1)));
    p.g = v / (n + 1);
    p.k = p.k_prime / 2;
    p.q = (n - 1) / 2;
    p.mu = (p.g % 2 != 0) ? (p.g - 1) / 2 : p.g / 2;
    p.w = static_cast<int>((p.mu + 1) % (n + 1));
    if (p.w == 0) p.w = n + 1;
    p.t = static_cast<int>(p.g % (n + 1));
    p.s = (v - 2) * (n + 1) / (2LL * n);
    return {p, Admissibility::admissible};
}

// Convenience for callers that already know (n, v) is admissible.
inline Params require_params(int n, long long v) {
    ParamsResult r = derive_params(n, v);
    if (!r.ok())
        throw std::invalid_argument("inadmissible (n=" + std::to_string(n) + ", v=" +
                                    std::to_string(v) + "): " + to_string(r.status));
    return *r.params;
}

// All admissible v <= v_max in ascending order: v = n(n+1)k' + 2(n+1), k' = 0, 1, ...
inline std::vector<Params> enumerate_admissible(int n, long long v_max) {
    check_n(n);
    std::vector<Params> out;
    const long long step = static_cast<long long>(n) * (n + 1);
    for (long long v = 2LL * (n + 1); v <= v_max; v += step)
        out.push_back(require_params(n, v));
    return out;
}

enum class Direction : unsigned char { forward, backward };

// A cyclic difference 1..mu on m points, optionally marked as the second
// (prime) occurrence of its value within an almost factor.
struct LabeledDifference {
    int value = 0;
    Direction direction = Direction::forward;
    bool prime = false;

    friend bool operator==(const LabeledDifference&, const LabeledDifference&) = default;
};

// Difference of the edge {u, x} on m cyclically labeled points:
// min(x-u, m-(x-u)), forward when the plain gap attains the minimum.
// Ties (gap exactly m/2) count as forward.
inline LabeledDifference edge_difference(long long u, long long x, long long m) {
    if (u >= x || u < 0 || x > m - 1)
        throw std::invalid_argument("edge_difference requires 0 <= u < x <= m-1");
    const long long gap = x - u;
    const long long wrap = m - gap;
    LabeledDifference d;
    d.value = static_cast<int>(gap <= wrap ? gap : wrap);
    d.direction = gap <= wrap ? Direction::forward : Direction::backward;
    return d;
}

} // namespace urd
