#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "severi/count.hpp"
#include "severi/errors.hpp"
#include "severi/fn2c.hpp"
#include "severi/surface.hpp"

namespace severi {

enum class Provenance { computed, seeded, external };

inline std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::computed: return "computed";
        case Provenance::seeded: return "seeded";
        case Provenance::external: return "external";
    }
    return {};
}

inline std::optional<Provenance> provenance_from_string(std::string_view s) {
    if (s == "computed") return Provenance::computed;
    if (s == "seeded") return Provenance::seeded;
    if (s == "external") return Provenance::external;
    return std::nullopt;
}

struct TableKey {
    Surface surface;
    std::vector<long long> coords;
    int tangency; // 1 for plain Severi degrees N(D)

    TableKey(const DivisorClass& d, int i)
        : surface(d.surface()), coords(d.coords().begin(), d.coords().end()), tangency(i) {}

    friend auto operator<=>(const TableKey&, const TableKey&) = default;
};

struct TableEntry {
    Count value;
    Provenance provenance;
    friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

// Memoized map (surface, divisor class, tangency index) -> Count. Entries
// with tangency 1 are the plain Severi degrees N(D); stored values are
// always >= 0. Iteration order is the canonical (surface, coords, i) order
// used by the on-disk format. Resolution through severi_degree mutates the
// table: use one table per thread, or serialize writes externally.
class NTable {
public:
    const TableEntry* find(const DivisorClass& d, int i = 1) const {
        auto it = entries_.find(TableKey(d, i));
        return it == entries_.end() ? nullptr : &it->second;
    }

    void set(const DivisorClass& d, int i, Count value, Provenance p) {
        if (value < 0) throw ConsistencyError("NTable: refusing to store a negative degree");
        entries_.insert_or_assign(TableKey(d, i), TableEntry{std::move(value), p});
    }

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const NTable&, const NTable&) = default;

private:
    std::map<TableKey, TableEntry> entries_;
};

Count severi_degree(const DivisorClass& d, NTable& table);

// The two reference curves each recursion intersects its families against:
// two lines on P2, the two rulings on Q, and two members of |C| on Fn.
inline std::pair<DivisorClass, DivisorClass> default_reference_curves(const Surface& s) {
    switch (s.kind()) {
        case Surface::Kind::plane: return {plane_class(1), plane_class(1)};
        case Surface::Kind::quadric: return {quadric_class(1, 0), quadric_class(0, 1)};
        case Surface::Kind::hirzebruch: return {section_class(s), section_class(s)};
    }
    throw std::logic_error("default_reference_curves: unknown surface kind");
}

// Signed weight of a two-component degeneration, the kernel every recursion
// sums over:
//
//   N(D1) N(D2) [ C(r0(D)-3, r0(D1)-1) (D1.C3)(D2.C4)
//               - C(r0(D)-3, r0(D1)-2) (D2.C3)(D2.C4) ]
//
// `total` supplies the r0(D)-3 binomial argument; it is passed explicitly
// because the sums over splittings of D - E still use r0(D).
// Intermediate values may be negative; only full recursion sums are
// guaranteed nonnegative.
inline Count degeneration_weight(const DivisorClass& d1, const DivisorClass& d2,
                                 const DivisorClass& total,
                                 const DivisorClass& c3, const DivisorClass& c4,
                                 NTable& table) {
    d1.require_same_surface(d2, "degeneration_weight");
    d1.require_same_surface(total, "degeneration_weight");
    d1.require_same_surface(c3, "degeneration_weight");
    d1.require_same_surface(c4, "degeneration_weight");

    Count n1 = severi_degree(d1, table);
    if (n1 == 0) return Count(0);
    Count n2 = severi_degree(d2, table);
    if (n2 == 0) return Count(0);

    long long top = severi_dim(total) - 3;
    long long r1 = severi_dim(d1);
    Count bracket = binomial(top, r1 - 1) * (intersect(d1, c3) * intersect(d2, c4))
                  - binomial(top, r1 - 2) * (intersect(d2, c3) * intersect(d2, c4));
    return n1 * n2 * bracket;
}

// Full ordered-pair recursion sum for a plane or quadric class:
//   sum over D1 + D2 = D of weight(D1, D2) * (D1.D2).
// Exposed separately from the seeded entry points so seed classes can be
// cross-checked against the sum.
inline Count pair_recursion_sum(const DivisorClass& d, NTable& table) {
    auto [c3, c4] = default_reference_curves(d.surface());
    Count total(0);
    for (const auto& split : decompositions(d, 2))
        total += degeneration_weight(split[0], split[1], d, c3, c4, table)
               * intersect(split[0], split[1]);
    return total;
}

// The two sums of the F2 recursion, kept apart for diagnostics: the halved
// sum over splittings of D and the sum over splittings of D - E weighted by
// intersections with E.
struct F2Terms {
    Count half_pair_sum;
    Count exceptional_sum;
    Count total() const { return half_pair_sum + exceptional_sum; }
};

inline F2Terms f2_recursion_terms(const DivisorClass& d, NTable& table) {
    const Surface& s = d.surface();
    if (s.kind() != Surface::Kind::hirzebruch || s.index() != 2)
        throw std::invalid_argument("f2_recursion_terms: class is not on F2");
    auto [c3, c4] = default_reference_curves(s);

    Count pair_sum(0);
    for (const auto& split : decompositions(d, 2))
        pair_sum += degeneration_weight(split[0], split[1], d, c3, c4, table)
                  * intersect(split[0], split[1]);
    if (pair_sum % 2 != 0)
        throw ConsistencyError("f2 recursion: pair sum is odd, halving would be inexact");

    DivisorClass e = exceptional_class(s);
    Count e_sum(0);
    for (const auto& split : decompositions(d - e, 2))
        e_sum += degeneration_weight(split[0], split[1], d, c3, c4, table)
               * (intersect(split[0], e) * intersect(split[1], e));

    return F2Terms{pair_sum / 2, e_sum};
}

namespace detail {

inline Count recurse_value(const DivisorClass& d, NTable& table) {
    const Surface& s = d.surface();
    switch (s.kind()) {
        case Surface::Kind::plane:
        case Surface::Kind::quadric:
            return pair_recursion_sum(d, table);
        case Surface::Kind::hirzebruch:
            if (s.index() == 2) return f2_recursion_terms(d, table).total();
            // No complete recursion exists for n >= 3; |2C| is the one class
            // with a closed formula there.
            if (d.coord(0) == 2 && d.coord(1) == 0) return closed_2c(s.index());
            throw MissingDegree("no recursion computes N(" + describe(d)
                                + "); supply the value externally");
    }
    throw std::logic_error("recurse_value: unknown surface kind");
}

} // namespace detail

// Degree of the Severi variety of rational curves in |D|, resolved through
// the memo table: seeds and zero classes by eligibility, everything else by
// the recursion for the class's surface. Queries for E throw.
inline Count severi_degree(const DivisorClass& d, NTable& table) {
    Eligibility eligibility = classify(d);
    if (eligibility == Eligibility::excluded)
        throw ExcludedClass("severi_degree: " + describe(d) + " is the class E on "
                            + d.surface().tag() + ", which is excluded from the theory");
    if (const TableEntry* hit = table.find(d)) return hit->value;
    switch (eligibility) {
        case Eligibility::zero:
            table.set(d, 1, Count(0), Provenance::seeded);
            return Count(0);
        case Eligibility::seed_one:
            table.set(d, 1, Count(1), Provenance::seeded);
            return Count(1);
        case Eligibility::recurse: {
            Count value = detail::recurse_value(d, table);
            if (value < 0)
                throw ConsistencyError("severi_degree: recursion produced a negative count");
            table.set(d, 1, value, Provenance::computed);
            return value;
        }
        case Eligibility::excluded:
            break; // handled above
    }
    throw std::logic_error("severi_degree: unreachable");
}

// Degree N(d) of rational plane curves of degree d (Kontsevich recursion).
inline Count plane_count(long long degree, NTable& table) {
    if (degree < 1) throw std::invalid_argument("plane_count: degree must be >= 1");
    return severi_degree(plane_class(degree), table);
}

// Degree N(a,b) of rational curves of bidegree (a,b) on the quadric.
inline Count quadric_count(const DivisorClass& d, NTable& table) {
    if (d.surface().kind() != Surface::Kind::quadric)
        throw std::invalid_argument("quadric_count: class is not on the quadric");
    return severi_degree(d, table);
}

// Degree N(D) on F2 via the two-sum recursion.
inline Count f2_count(const DivisorClass& d, NTable& table) {
    const Surface& s = d.surface();
    if (s.kind() != Surface::Kind::hirzebruch || s.index() != 2)
        throw std::invalid_argument("f2_count: class is not on F2");
    return severi_degree(d, table);
}

} // namespace severi
