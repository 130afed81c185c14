#pragma once

// Test-only transliterations of the displayed recursion formulas. They use
// their own Pascal-triangle binomials and their own memo maps so they share
// no arithmetic with the library paths they are used to check.

#include <map>
#include <vector>

#include <severi/count.hpp>

namespace oracles {

using severi::Count;

inline Count binomial(long long n, long long k) {
    if (k < 0 || k > n) return Count(0);
    std::vector<Count> row(n + 1, Count(0));
    row[0] = 1;
    for (long long i = 1; i <= n; ++i)
        for (long long j = i; j >= 1; --j) row[j] += row[j - 1];
    return row[k];
}

// N(d) = sum_{d1+d2=d} N(d1) N(d2) d1 d2 [ C(3d-4, 3d1-2) d1 d2 - C(3d-4, 3d1-3) d2^2 ]
inline Count plane_degree(long long d, std::map<long long, Count>& memo) {
    if (d == 1) return Count(1);
    if (auto it = memo.find(d); it != memo.end()) return it->second;
    Count total(0);
    for (long long d1 = 1; d1 < d; ++d1) {
        long long d2 = d - d1;
        Count bracket = binomial(3 * d - 4, 3 * d1 - 2) * (d1 * d2)
                      - binomial(3 * d - 4, 3 * d1 - 3) * (d2 * d2);
        total += plane_degree(d1, memo) * plane_degree(d2, memo) * (d1 * d2) * bracket;
    }
    memo[d] = total;
    return total;
}

struct QKey {
    long long a, b;
    auto operator<=>(const QKey&) const = default;
};

inline bool quadric_eligible(long long a, long long b) {
    if ((a == 1 && b == 0) || (a == 0 && b == 1)) return true;
    return a >= 1 && b >= 1;
}

// N(D) = sum_{D1+D2=D} gamma(D1,D2) (D1.D2) with C3, C4 the two rulings.
// On Q: r0(a,b) = 2a+2b-1, (a,b).(1,0) = b, (a,b).(0,1) = a,
// (a,b).(a',b') = ab' + a'b; classes with (a-1)(b-1) = 0 seed at 1.
inline Count quadric_degree(long long a, long long b, std::map<QKey, Count>& memo) {
    if (!quadric_eligible(a, b)) return Count(0);
    if ((a - 1) * (b - 1) == 0) return Count(1);
    if (auto it = memo.find({a, b}); it != memo.end()) return it->second;
    long long top = (2 * a + 2 * b - 1) - 3;
    Count total(0);
    for (long long a1 = 0; a1 <= a; ++a1)
        for (long long b1 = 0; b1 <= b; ++b1) {
            long long a2 = a - a1, b2 = b - b1;
            if (!quadric_eligible(a1, b1) || !quadric_eligible(a2, b2)) continue;
            long long r1 = 2 * a1 + 2 * b1 - 1;
            Count gamma = quadric_degree(a1, b1, memo) * quadric_degree(a2, b2, memo)
                        * (binomial(top, r1 - 1) * (b1 * a2)
                           - binomial(top, r1 - 2) * (b2 * a2));
            total += gamma * (a1 * b2 + a2 * b1);
        }
    memo[{a, b}] = total;
    return total;
}

// F2: seeds at 1 for the fiber class and for alpha >= 1, beta >= 0 with
// (alpha-1)(alpha+beta-1) = 0; otherwise the two-sum recursion with
// C3 = C4 = C:
//   N(D) = 1/2 sum_{D1+D2=D, Di != E} gamma(D1,D2) (D1.D2)
//        + sum_{D1+D2=D-E, Di != E} gamma(D1,D2) (D1.E)(D2.E).
// On F2: (a,b).(a',b') = 2aa' + ab' + a'b, r0(a,b) = 4a + 2b - 1,
// D.C = 2a + b, E = (1,-2), D.E = b.
struct F2Key {
    long long a, b;
    auto operator<=>(const F2Key&) const = default;
};

inline bool f2_eligible(long long a, long long b) {
    if (a == 1 && b == -2) return false; // E itself
    if (a == 0 && b == 1) return true;
    return a >= 1 && b >= 0;
}

inline Count f2_degree(long long a, long long b, std::map<F2Key, Count>& memo) {
    if (!f2_eligible(a, b)) return Count(0);
    if ((a == 0 && b == 1) || (a - 1) * (a + b - 1) == 0) return Count(1);
    if (auto it = memo.find({a, b}); it != memo.end()) return it->second;

    long long top = (4 * a + 2 * b - 1) - 3;
    auto gamma = [&](long long a1, long long b1, long long a2, long long b2) {
        long long r1 = 4 * a1 + 2 * b1 - 1;
        return f2_degree(a1, b1, memo) * f2_degree(a2, b2, memo)
             * (binomial(top, r1 - 1) * ((2 * a1 + b1) * (2 * a2 + b2))
                - binomial(top, r1 - 2) * ((2 * a2 + b2) * (2 * a2 + b2)));
    };

    Count pair_sum(0);
    for (long long a1 = 0; a1 <= a; ++a1)
        for (long long b1 = 0; b1 <= b; ++b1) {
            long long a2 = a - a1, b2 = b - b1;
            if (!f2_eligible(a1, b1) || !f2_eligible(a2, b2)) continue;
            pair_sum += gamma(a1, b1, a2, b2) * (2 * a1 * a2 + a1 * b2 + a2 * b1);
        }

    // splittings of D - E = (a-1, b+2); D_i.E = b_i
    Count e_sum(0);
    for (long long a1 = 0; a1 <= a - 1; ++a1)
        for (long long b1 = 0; b1 <= b + 2; ++b1) {
            long long a2 = a - 1 - a1, b2 = b + 2 - b1;
            if (!f2_eligible(a1, b1) || !f2_eligible(a2, b2)) continue;
            e_sum += gamma(a1, b1, a2, b2) * (b1 * b2);
        }

    Count total = pair_sum / 2 + e_sum;
    memo[{a, b}] = total;
    return total;
}

} // namespace oracles
