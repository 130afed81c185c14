#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "severi/count.hpp"
#include "severi/errors.hpp"

namespace severi {

// Four independent routes to the number of rational curves in |2C| on Fn
// through 2n+3 general points, plus the per-case degeneration ledger the
// closed formula was derived from. The routes share no intermediate
// arithmetic, so their agreement is a real consistency check.

// Closed form: sum_{k=0}^{n-1} (n-k)^2 C(2n+2, k).
inline Count closed_2c(int n) {
    if (n < 1) throw std::invalid_argument("closed_2c: n must be >= 1");
    Count total(0);
    for (long long k = 0; k <= n - 1; ++k)
        total += Count((n - k) * (n - k)) * binomial(2 * n + 2, k);
    return total;
}

// Telescoped binomial sum: sum_{k=0}^{n-1} C(n-k+1, 2) C(2n+3, k).
inline Count altsum_2c(int n) {
    if (n < 1) throw std::invalid_argument("altsum_2c: n must be >= 1");
    Count total(0);
    for (long long k = 0; k <= n - 1; ++k)
        total += binomial(n - k + 1, 2) * binomial(2 * n + 3, k);
    return total;
}

// Generating-function form: the coefficient of t^(n-1) in (1+t)^(2n+3)/(1-t)^3.
// The exponent is n-1, not n: expanding the telescoped sum as a product of
// power series pairs C(2n+3,k) with C(n-k+1,2) = C((n-1)-k+2, 2), and the
// exponent n reproduces none of the known values (it gives 48 instead of 10
// at n = 2).
inline Count genfunc_2c(int n) {
    if (n < 1) throw std::invalid_argument("genfunc_2c: n must be >= 1");
    return series_coeff(2 * n + 3, n - 1);
}

// One degeneration case: `count` fibers of a given shape, each contributing
// a zero or pole of order `multiplicity` to the cross-ratio function.
// `k` is the number of fiber components of the degenerate curve (0 for the
// two cases without E). `label` identifies how the four marked points sit on
// the components.
struct LedgerTerm {
    int k;
    std::string label;
    Count count;
    long long multiplicity;
    Count contribution() const { return count * multiplicity; }
};

// Per-case tabulation of every reducible fiber contributing to the zeroes
// or poles of the cross-ratio function for the |2C| family on Fn. The
// irreducible contribution n*N(2C) to the zero side is held symbolically:
//   zero side = n*N(2C) + zero_total(),  pole side = pole_total(),
// and the two sides are equal.
struct DegenerationLedger {
    int n;
    std::vector<LedgerTerm> zero_terms;
    std::vector<LedgerTerm> pole_terms;

    Count zero_total() const {
        Count total(0);
        for (const auto& t : zero_terms) total += t.contribution();
        return total;
    }
    Count pole_total() const {
        Count total(0);
        for (const auto& t : pole_terms) total += t.contribution();
        return total;
    }
};

// Builds the ledger: the two reducible cases without E, then for each
// k = 1..n-1 the eleven configurations of curves E + F_1 + ... + F_k + D
// with D in |C + (n-k)F| maximally tangent to E. Counts and multiplicities
// are kept per case so a failure pinpoints the configuration at fault.
inline DegenerationLedger ledger_2c(int n) {
    if (n < 1) throw std::invalid_argument("ledger_2c: n must be >= 1");
    DegenerationLedger ledger{n, {}, {}};
    const Count n3 = Count(n) * n * n;

    // Splittings C + C, no E component. One side through p1,p2; the other
    // carrying both reference-curve points.
    ledger.zero_terms.push_back({0, "C+C: p1,p2 | p3,p4", binomial(2 * n, n - 1) * n3, 1});
    ledger.pole_terms.push_back({0, "C+C: p1,p3 | p2,p4", binomial(2 * n, n) * n3, 1});

    for (long long k = 1; k <= n - 1; ++k) {
        const long long nk = n - k;      // tangency order of D with E
        const long long dc = 2 * n - k;  // D.C for D in |C+(n-k)F|
        const Count bk = binomial(2 * n, k);
        const Count bk1 = binomial(2 * n, k - 1);
        const Count bk2 = binomial(2 * n, k - 2);

        // zeroes
        ledger.zero_terms.push_back(
            {(int)k, "1: p1,p2 in D; p3,p4 in Fi", bk * (k * nk), nk + 1});
        ledger.zero_terms.push_back(
            {(int)k, "3: p1,p2 in D; p3 in Fi, p4 in Fj", bk * (k * (k - 1) * nk), 1});
        ledger.zero_terms.push_back(
            {(int)k, "5: p3,p4 in D; p1 in Fi, p2 in Fj", bk2 * (nk * dc * dc), 1});
        ledger.zero_terms.push_back(
            {(int)k, "6: p1 in D, p2 in Fi; p3,p4 in Fj (x2)", 2 * bk1 * ((k - 1) * nk), nk});
        ledger.zero_terms.push_back(
            {(int)k, "9: p1 in Fi, p2 in Fj; p3,p4 in Fl", bk2 * ((k - 2) * nk), nk});

        // poles
        ledger.pole_terms.push_back(
            {(int)k, "2: p1,p3 in D; p2,p4 in Fi (x2)", 2 * bk1 * (nk * dc), nk + 1});
        ledger.pole_terms.push_back(
            {(int)k, "4: p1,p3 in D; p2 in Fi, p4 in Fj (x2)", 2 * bk1 * ((k - 1) * nk * dc), 1});
        ledger.pole_terms.push_back(
            {(int)k, "7: p1 in D, p3 in Fi; p2,p4 in Fj (x2)", 2 * bk1 * ((k - 1) * nk), nk});
        ledger.pole_terms.push_back(
            {(int)k, "8: p3 in D, p1 in Fi; p2,p4 in Fj (x2)", 2 * bk2 * (nk * dc), nk});
        ledger.pole_terms.push_back(
            {(int)k, "10: p1 in Fi, p3 in Fj; p2,p4 in Fl (x2)", 2 * bk2 * ((k - 2) * nk), nk});
        ledger.pole_terms.push_back(
            {(int)k, "11: p1,p3 in Fi; p2,p4 in Fj", bk2 * nk, 2 * nk});
    }
    return ledger;
}

// Solves the ledger equality  n*N + zero_total = pole_total  for N. The
// division by n must be exact; an inexact division means a ledger case is
// wrong, not that the input is bad.
inline Count oracle_2c(int n) {
    DegenerationLedger ledger = ledger_2c(n);
    Count rhs = ledger.pole_total() - ledger.zero_total();
    if (rhs % n != 0)
        throw ConsistencyError("oracle_2c: ledger imbalance, n does not divide the net count");
    return rhs / n;
}

// Every quantity in the telescoping reduction of the ledger, each computed
// from its own displayed formula. The chain
//   s == s_from_reduced == s_prime - s_dblprime,
//   s_dblprime_raw == s_dblprime,
//   lead == lead_simplified,
//   lead_simplified + s_prime == lead_plus_sprime,
//   lead + s_prime - s_dblprime == telescoped == n * closed_2c(n)
// holds exactly for every n.
struct SReductions {
    Count s;               // per-case aggregate over k = 1..n-1
    Count s_from_reduced;  // coefficients reduced to (-kn, 2(2n-k)n, -kn), k from 0
    Count s_prime;         // 4n^2 (n-k) C(2n, k-1)
    Count s_dblprime_raw;  // (n-k) k n [C(2n,k) + 2C(2n,k-1) + C(2n,k-2)]
    Count s_dblprime;      // (n-k) k n C(2n+2, k)
    Count lead;            // n^3 (C(2n,n) - C(2n,n-1))
    Count lead_simplified; // n^2 C(2n, n-1)
    Count lead_plus_sprime;// n^2 sum (n-k) C(2n+2, k)
    Count telescoped;      // n sum (n-k)^2 C(2n+2, k)
};

inline SReductions s_reductions(int n) {
    if (n < 1) throw std::invalid_argument("s_reductions: n must be >= 1");
    SReductions r{};

    for (long long k = 1; k <= n - 1; ++k) {
        const long long nk = n - k;
        const long long dc = 2 * n - k;
        // pole-side minus zero-side coefficients of the E cases, per binomial
        Count ck = binomial(2 * n, k) * (-(k * (nk + 1)) - k * (k - 1));
        Count ck1 = binomial(2 * n, k - 1)
                  * (2 * dc * (nk + 1) + 2 * dc * (k - 1) + 2 * (k - 1) * nk - 2 * (k - 1) * nk);
        Count ck2 = binomial(2 * n, k - 2)
                  * (2 * dc * nk + 2 * (k - 2) * nk + 2 * nk - dc * dc - (k - 2) * nk);
        r.s += Count(nk) * (ck + ck1 + ck2);
    }

    // Formal limits extended to k = 0; the k factor kills the new terms.
    for (long long k = 0; k <= n - 1; ++k) {
        const long long nk = n - k;
        const long long dc = 2 * n - k;
        r.s_from_reduced += Count(nk)
                          * (binomial(2 * n, k) * (-(k * n))
                             + binomial(2 * n, k - 1) * (2 * dc * n)
                             + binomial(2 * n, k - 2) * (-(k * n)));
        r.s_prime += Count(4) * n * n * nk * binomial(2 * n, k - 1);
        r.s_dblprime_raw += Count(nk) * k * n
                          * (binomial(2 * n, k) + 2 * binomial(2 * n, k - 1)
                             + binomial(2 * n, k - 2));
        r.s_dblprime += Count(nk) * k * n * binomial(2 * n + 2, k);
        r.lead_plus_sprime += Count(n) * n * nk * binomial(2 * n + 2, k);
        r.telescoped += Count(n) * nk * nk * binomial(2 * n + 2, k);
    }

    r.lead = Count(n) * n * n * (binomial(2 * n, n) - binomial(2 * n, n - 1));
    r.lead_simplified = Count(n) * n * binomial(2 * n, n - 1);
    return r;
}

} // namespace severi
