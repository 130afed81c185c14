#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace severi {

// Exact arbitrary-precision signed integer. Every curve count, degeneration
// weight and ledger total in this library is a Count; machine integers are
// used only for lattice data (coordinates, dimensions, genera), which stay
// small. Equality is exact, there is no overflow at any input size.
using Count = boost::multiprecision::cpp_int;

// Exact rational, used only where a formula divides before the result is
// known to be integral (the multi-tangency degeneration weight).
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient with the vanishing convention: 0 whenever k < 0 or
// k > n. The recursion sums rely on out-of-range binomials silently dropping
// boundary terms, so this never throws.
inline Count binomial(long long n, long long k) {
    if (k < 0 || k > n) return Count(0);
    if (k > n - k) k = n - k;
    Count result(1);
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i; // exact: result is binomial(n-k+i, i) after this step
    }
    return result;
}

// Multinomial coefficient n! / (p_1! p_2! ... p_m! r!) where r = n - sum(p_j)
// is an implicit residual slot. Returns 0 if any listed part is negative or
// the listed parts overshoot n.
inline Count multinomial(long long n, std::span<const long long> parts) {
    Count result(1);
    long long remaining = n;
    long long used = 0;
    for (long long p : parts) {
        if (p < 0) return Count(0);
        used += p;
        if (used > n) return Count(0);
        result *= binomial(remaining, p);
        remaining -= p;
    }
    return result;
}

inline Count multinomial(long long n, std::initializer_list<long long> parts) {
    return multinomial(n, std::span<const long long>(parts.begin(), parts.size()));
}

// Coefficient of t^m in (1+t)^a / (1-t)^3, computed exactly as
//   sum_{k=0..m} binomial(a,k) * binomial(m-k+2, 2).
inline Count series_coeff(long long a, long long m) {
    if (a < 0 || m < 0) throw std::invalid_argument("series_coeff: a and m must be nonnegative");
    Count total(0);
    for (long long k = 0; k <= m; ++k) total += binomial(a, k) * binomial(m - k + 2, 2);
    return total;
}

} // namespace severi
