#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "severi/count.hpp"
#include "severi/errors.hpp"
#include "severi/ntable.hpp"
#include "severi/surface.hpp"

namespace severi {

// Tangential Severi degrees N_i(D) for the general-Fn formula. The i = 1
// entries are plain Severi degrees and are filled in from the recursions on
// demand; degrees for contact order i >= 2 are inputs that have to be
// supplied (the published theory has no recursion for them), and a lookup
// that misses is a hard error rather than a default.
class TangentialDegreeTable {
public:
    TangentialDegreeTable() = default;
    explicit TangentialDegreeTable(NTable base) : base_(std::move(base)) {}

    NTable& base() { return base_; }
    const NTable& base() const { return base_; }

    void set_external(const DivisorClass& d, int order, Count value) {
        base_.set(d, order, std::move(value), Provenance::external);
    }

    Count resolve(const DivisorClass& d, int order) {
        if (order < 1) throw std::invalid_argument("TangentialDegreeTable: order must be >= 1");
        if (const TableEntry* hit = base_.find(d, order)) return hit->value;
        if (order == 1) return severi_degree(d, base_);
        throw MissingDegree("no tangential degree N_" + std::to_string(order) + "("
                            + describe(d) + "); supply it in the external table");
    }

private:
    NTable base_;
};

// All ordered tuples (i_1,...,i_t) of contact orders, i_j >= 1, with
// sum (i_j - 1) = n - t; equivalently the compositions of n into t positive
// parts, so there are C(n-1, t-1) of them. Lexicographic order.
inline std::vector<TangencyTuple> tangency_tuples(int parts, int n) {
    if (parts < 2 || parts > n)
        throw std::invalid_argument("tangency_tuples: need 2 <= parts <= n");
    std::vector<TangencyTuple> out;
    std::vector<int> current(parts, 1);
    // compose n - parts extra units over `parts` slots
    auto recurse = [&](auto&& self, int slot, int left) -> void {
        if (slot == parts - 1) {
            current[slot] = 1 + left;
            out.emplace_back(current);
            return;
        }
        for (int extra = 0; extra <= left; ++extra) {
            current[slot] = 1 + extra;
            self(self, slot + 1, left - extra);
        }
    };
    recurse(recurse, 0, n - parts);
    return out;
}

// Multi-tangency degeneration weight, evaluated literally as published:
//
//   prod_j (i_j N_{i_j}(D_j)) * [ M1 * A1 - M2 * A2 ]
//
//   M1 = multinomial(r0(D)-3; r0^{i1}(D1)-1, r0^{i2}(D2)-1, r0^{i3}(D3), ...)
//   A1 = sum_{j>=3} (C.Dj)/i_j ((C.D1)/i_1 + (C.D2)/i_2)
//        - sum_{j>=3} (C.Dj)^2/i_j
//   M2 = multinomial(r0(D)-3; r0^{i1}(D1)-2, r0^{i2}(D2), r0^{i3}(D3), ...)
//   A2 = sum_{j>=2} (C.Dj)^2 (1/i_j + 1/i_1)
//        + (1/i_1) sum_{2<=j<k<=t} (C.Dj)(C.Dk)
//
// evaluated over exact rationals; the result is asserted integral. At t = 2
// both j >= 3 sums are empty, so the first bracket term vanishes under this
// literal reading; the published two-part weight does not reduce to it, and
// the comparison is surfaced as a diagnostic rather than patched over.
inline Count tangential_weight(const TangencyTuple& orders,
                               std::span<const DivisorClass> parts,
                               const DivisorClass& total,
                               TangentialDegreeTable& table) {
    const std::size_t t = parts.size();
    if (t < 2) throw std::invalid_argument("tangential_weight: need at least two parts");
    if (orders.size() != t)
        throw std::invalid_argument("tangential_weight: contact orders and parts differ in length");
    const Surface& s = total.surface();
    if (s.kind() != Surface::Kind::hirzebruch)
        throw std::invalid_argument("tangential_weight: classes must live on a Hirzebruch surface");
    for (const auto& p : parts) p.require_same_surface(total, "tangential_weight");

    Count degree_product(1);
    for (std::size_t j = 0; j < t; ++j) {
        Count nj = table.resolve(parts[j], orders[j]);
        if (nj == 0) return Count(0);
        degree_product *= Count(orders[j]) * nj;
    }

    const DivisorClass c = section_class(s);
    std::vector<Rational> cd(t); // (C.Dj) as rationals for the divided sums
    for (std::size_t j = 0; j < t; ++j) cd[j] = Rational(intersect(c, parts[j]));

    const long long top = severi_dim(total) - 3;

    std::vector<long long> lower1, lower2;
    lower1.push_back(tangential_severi_dim(parts[0], orders[0]) - 1);
    lower1.push_back(tangential_severi_dim(parts[1], orders[1]) - 1);
    lower2.push_back(tangential_severi_dim(parts[0], orders[0]) - 2);
    lower2.push_back(tangential_severi_dim(parts[1], orders[1]));
    for (std::size_t j = 2; j < t; ++j) {
        lower1.push_back(tangential_severi_dim(parts[j], orders[j]));
        lower2.push_back(tangential_severi_dim(parts[j], orders[j]));
    }
    const Count m1 = multinomial(top, lower1);
    const Count m2 = multinomial(top, lower2);

    Rational a1(0);
    const Rational lead_pair = cd[0] / orders[0] + cd[1] / orders[1];
    for (std::size_t j = 2; j < t; ++j)
        a1 += cd[j] / orders[j] * lead_pair - cd[j] * cd[j] / orders[j];

    Rational a2(0);
    const Rational inv_first = Rational(1, orders[0]);
    for (std::size_t j = 1; j < t; ++j)
        a2 += cd[j] * cd[j] * (Rational(1, orders[j]) + inv_first);
    for (std::size_t j = 1; j < t; ++j)
        for (std::size_t k = j + 1; k < t; ++k)
            a2 += inv_first * cd[j] * cd[k];

    Rational bracket = Rational(m1) * a1 - Rational(m2) * a2;
    Rational result = Rational(degree_product) * bracket;
    if (boost::multiprecision::denominator(result) != 1)
        throw ConsistencyError("tangential_weight: value is not an integer");
    return boost::multiprecision::numerator(result);
}

// Right-hand side of the general-Fn relation
//
//   n N(D) = sum_{D1+D2=D} (D1.D2) w_{1,1}(D1, D2)
//          + sum_{t=2..n} sum_{D1+..+Dt=D-E} sum_{(i_1..i_t)}
//              prod_{j : i_j = 1} (E.Dj) * w_{i_1..i_t}(D1,...,Dt)
//
// over ordered decompositions, with contact tuples constrained by
// sum (i_j - 1) = n - t. Returns the full right-hand side; it is the
// caller's business to divide by n (and to judge the quotient, since for
// n >= 3 the inputs N_i are external and for n = 2 the literal weight is
// known not to reproduce the two-part recursion).
inline Count fn_rhs(const DivisorClass& d, TangentialDegreeTable& table) {
    const Surface& s = d.surface();
    if (s.kind() != Surface::Kind::hirzebruch)
        throw std::invalid_argument("fn_rhs: class must live on a Hirzebruch surface");
    const int n = s.index();

    Count total(0);
    const TangencyTuple plain({1, 1});
    for (const auto& split : decompositions(d, 2))
        total += Count(intersect(split[0], split[1]))
               * tangential_weight(plain, split, d, table);

    const DivisorClass e = exceptional_class(s);
    for (int t = 2; t <= n; ++t) {
        const auto tuples = tangency_tuples(t, n);
        for (const auto& parts : decompositions(d - e, t)) {
            for (const auto& orders : tuples) {
                Count prefactor(1);
                for (std::size_t j = 0; j < parts.size(); ++j)
                    if (orders[j] == 1) prefactor *= intersect(e, parts[j]);
                if (prefactor == 0) continue; // the term vanishes whatever the weight is
                total += prefactor * tangential_weight(orders, parts, d, table);
            }
        }
    }
    return total;
}

} // namespace severi
