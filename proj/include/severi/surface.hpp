#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "severi/errors.hpp"

namespace severi {

// One of the three rational surface families the counting formulas cover:
// the projective plane, the smooth quadric P1 x P1, or a Hirzebruch surface
// F_n = P(O + O(n)) with n >= 1.
class Surface {
public:
    enum class Kind { plane, quadric, hirzebruch };

    static Surface plane() { return Surface(Kind::plane, 0); }
    static Surface quadric() { return Surface(Kind::quadric, 0); }
    static Surface hirzebruch(int n) {
        if (n < 1) throw std::invalid_argument("Surface: Hirzebruch index must be >= 1");
        return Surface(Kind::hirzebruch, n);
    }

    Kind kind() const { return kind_; }

    // Hirzebruch index n; only meaningful for the ruled family.
    int index() const {
        if (kind_ != Kind::hirzebruch)
            throw std::logic_error("Surface::index: not a Hirzebruch surface");
        return n_;
    }

    // Rank of the chosen Picard basis: 1 for the plane, 2 otherwise.
    int rank() const { return kind_ == Kind::plane ? 1 : 2; }

    // Short tag used in all file formats and CLI output: "P2", "Q", "F<n>".
    std::string tag() const {
        switch (kind_) {
            case Kind::plane: return "P2";
            case Kind::quadric: return "Q";
            case Kind::hirzebruch: return "F" + std::to_string(n_);
        }
        return {};
    }

    static std::optional<Surface> from_tag(std::string_view tag) {
        if (tag == "P2" || tag == "p2") return plane();
        if (tag == "Q" || tag == "q") return quadric();
        if (tag.size() >= 2 && (tag[0] == 'F' || tag[0] == 'f')) {
            int n = 0;
            for (char c : tag.substr(1)) {
                if (c < '0' || c > '9') return std::nullopt;
                n = n * 10 + (c - '0');
                if (n > 1000000) return std::nullopt;
            }
            if (n >= 1) return hirzebruch(n);
        }
        return std::nullopt;
    }

    friend auto operator<=>(const Surface&, const Surface&) = default;

private:
    Surface(Kind k, int n) : kind_(k), n_(n) {}
    Kind kind_;
    int n_; // Hirzebruch index, 0 for the other kinds
};

// An integer divisor class in the surface's chosen Picard basis:
//   P2: (d)            degree
//   Q:  (a, b)         bidegree in the two rulings
//   Fn: (alpha, beta)  alpha*C + beta*F, with C^2 = n, F^2 = 0, C.F = 1.
// The unique curve of negative self-intersection on Fn is E = C - nF,
// i.e. coordinates (1, -n); it is a derived constant, not a basis element.
class DivisorClass {
public:
    DivisorClass(Surface surface, std::vector<long long> coords)
        : surface_(surface), coords_(std::move(coords)) {
        if (static_cast<int>(coords_.size()) != surface_.rank())
            throw std::invalid_argument("DivisorClass: coordinate count does not match surface rank");
    }

    const Surface& surface() const { return surface_; }
    std::span<const long long> coords() const { return coords_; }
    long long coord(std::size_t i) const { return coords_.at(i); }

    DivisorClass& operator+=(const DivisorClass& other) {
        require_same_surface(other, "DivisorClass::operator+=");
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
        return *this;
    }
    DivisorClass& operator-=(const DivisorClass& other) {
        require_same_surface(other, "DivisorClass::operator-=");
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
        return *this;
    }
    friend DivisorClass operator+(DivisorClass lhs, const DivisorClass& rhs) { return lhs += rhs; }
    friend DivisorClass operator-(DivisorClass lhs, const DivisorClass& rhs) { return lhs -= rhs; }

    friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

    void require_same_surface(const DivisorClass& other, const char* where) const {
        if (surface_ != other.surface_)
            throw SurfaceMismatch(std::string(where) + ": divisor classes on different surfaces");
    }

private:
    Surface surface_;
    std::vector<long long> coords_;
};

// "F2 (2,0)" style rendering for messages and diagnostics.
inline std::string describe(const DivisorClass& d) {
    std::string text = d.surface().tag() + " (";
    for (std::size_t i = 0; i < d.coords().size(); ++i) {
        if (i) text += ",";
        text += std::to_string(d.coord(i));
    }
    return text + ")";
}

inline DivisorClass plane_class(long long degree) {
    return DivisorClass(Surface::plane(), {degree});
}
inline DivisorClass quadric_class(long long a, long long b) {
    return DivisorClass(Surface::quadric(), {a, b});
}
inline DivisorClass ruled_class(const Surface& s, long long alpha, long long beta) {
    if (s.kind() != Surface::Kind::hirzebruch)
        throw std::invalid_argument("ruled_class: surface is not Hirzebruch");
    return DivisorClass(s, {alpha, beta});
}

// The section class C on Fn.
inline DivisorClass section_class(const Surface& s) { return ruled_class(s, 1, 0); }
// The fiber class F on Fn.
inline DivisorClass fiber_class(const Surface& s) { return ruled_class(s, 0, 1); }
// The negative curve E = C - nF on Fn.
inline DivisorClass exceptional_class(const Surface& s) {
    return ruled_class(s, 1, -static_cast<long long>(s.index()));
}

// Symmetric bilinear intersection pairing in the chosen basis:
//   P2: d d'
//   Q:  a b' + a' b
//   Fn: (aC+bF).(a'C+b'F) = a a' n + a b' + a' b
inline long long intersect(const DivisorClass& d1, const DivisorClass& d2) {
    d1.require_same_surface(d2, "intersect");
    switch (d1.surface().kind()) {
        case Surface::Kind::plane:
            return d1.coord(0) * d2.coord(0);
        case Surface::Kind::quadric:
            return d1.coord(0) * d2.coord(1) + d2.coord(0) * d1.coord(1);
        case Surface::Kind::hirzebruch:
            return d1.coord(0) * d2.coord(0) * d1.surface().index()
                 + d1.coord(0) * d2.coord(1) + d2.coord(0) * d1.coord(1);
    }
    return 0;
}

// Canonical class: -3H on P2, (-2,-2) on Q, -C-E-2F = (-2, n-2) on Fn.
inline DivisorClass canonical_class(const Surface& s) {
    switch (s.kind()) {
        case Surface::Kind::plane: return plane_class(-3);
        case Surface::Kind::quadric: return quadric_class(-2, -2);
        case Surface::Kind::hirzebruch: return ruled_class(s, -2, s.index() - 2);
    }
    throw std::logic_error("canonical_class: unknown surface kind");
}

// Arithmetic genus (D.D + D.K)/2 + 1; may be negative for ineffective or
// decomposable classes.
inline long long arithmetic_genus(const DivisorClass& d) {
    long long self = intersect(d, d);
    long long with_k = intersect(d, canonical_class(d.surface()));
    return (self + with_k) / 2 + 1;
}

// Dimension of the Severi variety of rational curves in |D|: -(K.D) - 1.
// It equals the number of general points a count is taken through.
inline long long severi_dim(const DivisorClass& d) {
    return -intersect(canonical_class(d.surface()), d) - 1;
}

// Dimension of the full linear series |D| under the equality regime
// r(D) = r0(D) + p_a(D) that holds for every class handled here.
inline long long series_dim(const DivisorClass& d) {
    return severi_dim(d) + arithmetic_genus(d);
}

// Ordered tuple (i_1,...,i_t) of contact orders with E, each >= 1.
class TangencyTuple {
public:
    explicit TangencyTuple(std::vector<int> orders) : orders_(std::move(orders)) {
        for (int i : orders_)
            if (i < 1) throw std::invalid_argument("TangencyTuple: contact orders must be >= 1");
    }
    std::size_t size() const { return orders_.size(); }
    int operator[](std::size_t j) const { return orders_.at(j); }
    auto begin() const { return orders_.begin(); }
    auto end() const { return orders_.end(); }
    // sum of (i_j - 1); the codimension the tuple imposes on the Severi variety
    int contact_excess() const {
        int excess = 0;
        for (int i : orders_) excess += i - 1;
        return excess;
    }
    friend auto operator<=>(const TangencyTuple&, const TangencyTuple&) = default;

private:
    std::vector<int> orders_;
};

// Dimension of the tangential Severi variety with a single contact of
// order i along E: severi_dim(D) - (i - 1).
inline long long tangential_severi_dim(const DivisorClass& d, int order) {
    if (order < 1) throw std::invalid_argument("tangential_severi_dim: order must be >= 1");
    return severi_dim(d) - (order - 1);
}

inline long long severi_dim(const DivisorClass& d, const TangencyTuple& orders) {
    return severi_dim(d) - orders.contact_excess();
}

// Role of a class in the recursions.
//   seed_one: genus-0 linear system, degree 1 (exactly one member through
//             severi_dim(D) general points).
//   recurse:  nonempty Severi variety with p_a > 0; value comes from a
//             recursion (or, on Fn with n >= 3, from external data).
//   zero:     empty Severi variety, N(D) = 0 by convention.
//   excluded: the class E on Fn, barred from every sum and every query.
enum class Eligibility { seed_one, recurse, zero, excluded };

inline Eligibility classify(const DivisorClass& d) {
    switch (d.surface().kind()) {
        case Surface::Kind::plane: {
            long long deg = d.coord(0);
            if (deg == 1) return Eligibility::seed_one;
            if (deg >= 2) return Eligibility::recurse;
            return Eligibility::zero;
        }
        case Surface::Kind::quadric: {
            long long a = d.coord(0), b = d.coord(1);
            if ((a == 1 && b == 0) || (a == 0 && b == 1)) return Eligibility::seed_one;
            if (a >= 1 && b >= 1)
                return arithmetic_genus(d) == 0 ? Eligibility::seed_one : Eligibility::recurse;
            return Eligibility::zero;
        }
        case Surface::Kind::hirzebruch: {
            long long alpha = d.coord(0), beta = d.coord(1);
            if (alpha == 1 && beta == -static_cast<long long>(d.surface().index()))
                return Eligibility::excluded;
            if (alpha == 0 && beta == 1) return Eligibility::seed_one;
            if (alpha >= 1 && beta >= 0)
                return arithmetic_genus(d) == 0 ? Eligibility::seed_one : Eligibility::recurse;
            return Eligibility::zero;
        }
    }
    return Eligibility::zero;
}

namespace detail {

inline void decompose_into(const DivisorClass& remainder, int parts_left,
                           std::vector<DivisorClass>& prefix,
                           std::vector<std::vector<DivisorClass>>& out) {
    const Surface& s = remainder.surface();
    if (parts_left == 1) {
        Eligibility e = classify(remainder);
        if (e == Eligibility::seed_one || e == Eligibility::recurse) {
            prefix.push_back(remainder);
            out.push_back(prefix);
            prefix.pop_back();
        }
        return;
    }
    // Enumerate one part inside the coordinate box [0, remainder]; the
    // eligibility filter keeps only classes that can carry a nonzero count.
    if (s.rank() == 1) {
        for (long long c = 0; c <= remainder.coord(0); ++c) {
            DivisorClass part(s, {c});
            Eligibility e = classify(part);
            if (e != Eligibility::seed_one && e != Eligibility::recurse) continue;
            prefix.push_back(part);
            decompose_into(remainder - part, parts_left - 1, prefix, out);
            prefix.pop_back();
        }
    } else {
        for (long long c0 = 0; c0 <= remainder.coord(0); ++c0) {
            for (long long c1 = 0; c1 <= remainder.coord(1); ++c1) {
                DivisorClass part(s, {c0, c1});
                Eligibility e = classify(part);
                if (e != Eligibility::seed_one && e != Eligibility::recurse) continue;
                prefix.push_back(part);
                decompose_into(remainder - part, parts_left - 1, prefix, out);
                prefix.pop_back();
            }
        }
    }
}

} // namespace detail

// All ordered tuples (D_1,...,D_t) of eligible classes with sum d. Classes of
// eligibility zero or excluded are omitted; they either carry N = 0 or are
// barred by the summation conditions, so no sum over these tuples changes.
// The enumeration is finite: every part lies in the coordinate box [0, d]
// (the fiber class, the only eligible class with first coordinate 0 on Fn,
// is inside the box as well).
inline std::vector<std::vector<DivisorClass>> decompositions(const DivisorClass& d, int parts) {
    if (parts < 2) throw std::invalid_argument("decompositions: need at least two parts");
    std::vector<std::vector<DivisorClass>> out;
    for (long long c : d.coords())
        if (c < 0) return out; // nothing effective sums to a class outside the cone box
    std::vector<DivisorClass> prefix;
    detail::decompose_into(d, parts, prefix, out);
    return out;
}

} // namespace severi
