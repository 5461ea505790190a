#pragma once

/**
 * @file structure.hpp
 * @brief Structural invariants of a finite ring.
 *
 * Units, idempotents, nilpotents, the Jacobson radical, the center and the
 * partition of the idempotents into conjugacy classes. Everything is
 * computed by exhaustive scans over the tables and cached on the ring the
 * first time any of it is requested.
 *
 * The radical is computed as {x : 1 - r x is a unit for all r} and cross
 * checked against the right-handed version. Three post-conditions are then
 * verified and an InvariantViolation is thrown if any of them fails:
 * J is a two-sided ideal, 1 + J consists of units, and J(R/J) = {0}.
 */

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "finring/ideal.hpp"
#include "finring/ring.hpp"
#include "finring/witness.hpp"

namespace finring {

struct UnitGroupCache {
    ElementSubset units;
    /// inverse[u] for units; the ring order for non-units.
    std::vector<Elem> inverse;

    bool is_unit(Elem a) const noexcept { return units.contains(a); }
};

struct StructureCache {
    UnitGroupCache units;
    ElementSubset idempotents;
    ElementSubset nilpotents;
    ElementSubset radical;
    ElementSubset center;
    /// Orbits of Id(R) under conjugation, each ascending, ordered by least member.
    std::vector<std::vector<Elem>> conjugacy_classes;
    /// Class index per element; npos for non-idempotents.
    std::vector<std::uint32_t> class_of;

    static constexpr std::uint32_t npos = ~std::uint32_t{0};
};

namespace detail {

inline UnitGroupCache compute_units(const FiniteRing& R) {
    const std::uint32_t n = R.order();
    const Elem one = R.one();
    UnitGroupCache cache;
    cache.inverse.assign(n, n);
    std::vector<bool> mask(n, false);
    const auto mul = R.mul_table();
    for (Elem a = 0; a < n; ++a) {
        if (mask[a]) continue;
        const Elem* row = mul.data() + std::size_t(a) * n;
        for (Elem b = 0; b < n; ++b) {
            if (row[b] == one && R.mul(b, a) == one) {
                mask[a] = mask[b] = true;
                cache.inverse[a] = b;
                cache.inverse[b] = a;
                break;
            }
        }
    }
    cache.units = ElementSubset::from_mask(std::move(mask));
    return cache;
}

inline ElementSubset compute_idempotents(const FiniteRing& R) {
    std::vector<bool> mask(R.order(), false);
    for (Elem a = 0; a < R.order(); ++a) mask[a] = R.mul(a, a) == a;
    return ElementSubset::from_mask(std::move(mask));
}

inline ElementSubset compute_nilpotents(const FiniteRing& R) {
    const std::uint32_t n = R.order();
    std::vector<bool> mask(n, false);
    std::vector<Elem> stamp(n, n);
    for (Elem a = 0; a < n; ++a) {
        Elem x = a;
        while (true) {
            if (x == R.zero()) {
                mask[a] = true;
                break;
            }
            if (stamp[x] == a) break;  // power sequence entered a cycle avoiding zero
            stamp[x] = a;
            x = R.mul(x, a);
        }
    }
    return ElementSubset::from_mask(std::move(mask));
}

/// Left and right quasi-regularity scans; they must agree in a finite ring.
inline ElementSubset compute_radical(const FiniteRing& R, const UnitGroupCache& U) {
    const std::uint32_t n = R.order();
    const auto mul = R.mul_table();
    std::vector<bool> left(n, true), right(n, true);
    for (Elem r = 0; r < n; ++r) {
        const Elem* row = mul.data() + std::size_t(r) * n;
        for (Elem x = 0; x < n; ++x) {
            // 1 - r x: constrains x on the left, r on the right
            if (!U.is_unit(R.sub(R.one(), row[x]))) left[x] = right[r] = false;
        }
    }
    if (left != right) throw InvariantViolation(R.label() + ": left and right quasi-regular sets differ");
    return ElementSubset::from_mask(std::move(left));
}

inline ElementSubset compute_center(const FiniteRing& R) {
    const std::uint32_t n = R.order();
    std::vector<bool> mask(n, true);
    for (Elem a = 0; a < n; ++a)
        for (Elem x = a + 1; x < n; ++x)
            if (R.mul(a, x) != R.mul(x, a)) mask[a] = mask[x] = false;
    return ElementSubset::from_mask(std::move(mask));
}

inline void verify_radical(const FiniteRing& R, const UnitGroupCache& U, const ElementSubset& J) {
    if (auto c = is_two_sided_ideal(R, J); !c.holds)
        throw InvariantViolation(R.label() + ": computed radical is not an ideal (" + c.witness->reason + ")");
    for (Elem j : J)
        if (!U.is_unit(R.add(R.one(), j)))
            throw InvariantViolation(R.label() + ": 1 + " + std::to_string(j) + " is not a unit");
    auto Q = quotient_unchecked(R, J, R.label() + "/J");
    const auto QU = compute_units(Q.ring);
    const auto QJ = compute_radical(Q.ring, QU);
    if (QJ.size() != 1) throw InvariantViolation(R.label() + ": J(R/J) is not zero");
}

inline void compute_classes(const FiniteRing& R, StructureCache& S) {
    S.class_of.assign(R.order(), StructureCache::npos);
    for (Elem e : S.idempotents) {
        if (S.class_of[e] != StructureCache::npos) continue;
        const auto cls = static_cast<std::uint32_t>(S.conjugacy_classes.size());
        std::vector<Elem> orbit;
        for (Elem u : S.units.units) {
            const Elem c = R.mul(R.mul(S.units.inverse[u], e), u);
            if (S.class_of[c] == StructureCache::npos) {
                S.class_of[c] = cls;
                orbit.push_back(c);
            } else if (S.class_of[c] != cls) {
                throw InvariantViolation(R.label() + ": conjugacy orbits overlap");
            }
        }
        std::sort(orbit.begin(), orbit.end());
        S.conjugacy_classes.push_back(std::move(orbit));
    }
}

inline std::shared_ptr<const StructureCache> analyze(const FiniteRing& R) {
    auto S = std::make_shared<StructureCache>();
    S->units = compute_units(R);
    S->idempotents = compute_idempotents(R);
    S->nilpotents = compute_nilpotents(R);
    S->radical = compute_radical(R, S->units);
    verify_radical(R, S->units, S->radical);
    S->center = compute_center(R);
    compute_classes(R, *S);
    return S;
}

}  // namespace detail

/// Cached structure of R; computed once per ring, thread-safe.
inline const StructureCache& structure_of(const FiniteRing& R) {
    auto& c = R.caches();
    std::call_once(c.structure_once, [&] { c.structure = detail::analyze(R); });
    return *c.structure;
}

inline const ElementSubset& idempotents(const FiniteRing& R) { return structure_of(R).idempotents; }
inline const UnitGroupCache& units(const FiniteRing& R) { return structure_of(R).units; }
inline const ElementSubset& nilpotents(const FiniteRing& R) { return structure_of(R).nilpotents; }
inline const ElementSubset& jacobson_radical(const FiniteRing& R) { return structure_of(R).radical; }
inline const ElementSubset& center(const FiniteRing& R) { return structure_of(R).center; }

inline bool is_unit(const FiniteRing& R, Elem a) { return units(R).is_unit(a); }
inline bool is_idempotent(const FiniteRing& R, Elem a) { return R.mul(a, a) == a; }

inline Elem inverse(const FiniteRing& R, Elem u) {
    const auto& U = units(R);
    if (!U.is_unit(u)) throw std::invalid_argument("element " + std::to_string(u) + " is not a unit");
    return U.inverse[u];
}

inline const std::vector<std::vector<Elem>>& idempotent_conjugacy_classes(const FiniteRing& R) {
    return structure_of(R).conjugacy_classes;
}

inline bool same_conjugacy_class(const FiniteRing& R, Elem e, Elem f) {
    const auto& S = structure_of(R);
    return S.class_of.at(e) != StructureCache::npos && S.class_of[e] == S.class_of.at(f);
}

/// Least unit u with e = u^-1 f u, if any.
inline std::optional<Elem> are_conjugate(const FiniteRing& R, Elem e, Elem f) {
    check_index(R, e);
    check_index(R, f);
    if (!is_idempotent(R, e) || !is_idempotent(R, f))
        throw std::invalid_argument("are_conjugate expects idempotents");
    const auto& U = units(R);
    for (Elem u : U.units)
        if (R.mul(R.mul(U.inverse[u], f), u) == e) return u;
    return std::nullopt;
}

inline Check is_boolean(const FiniteRing& R) {
    for (Elem x = 0; x < R.order(); ++x)
        if (R.mul(x, x) != x) return Check::fail({"x*x != x", {{"x", x}}});
    return Check::pass();
}

inline Check is_reduced(const FiniteRing& R) {
    for (Elem x : nilpotents(R))
        if (x != R.zero()) return Check::fail({"nonzero nilpotent", {{"x", x}}});
    return Check::pass();
}

inline Check is_abelian(const FiniteRing& R) {
    for (Elem e : idempotents(R))
        for (Elem r = 0; r < R.order(); ++r)
            if (R.mul(e, r) != R.mul(r, e)) return Check::fail({"non-central idempotent", {{"e", e}, {"r", r}}});
    return Check::pass();
}

/// Local: the non-units are closed under addition. When that holds the
/// non-units must coincide with J(R).
inline Check is_local(const FiniteRing& R) {
    const auto& U = units(R);
    std::vector<Elem> non_units;
    for (Elem a = 0; a < R.order(); ++a)
        if (!U.is_unit(a)) non_units.push_back(a);
    for (Elem a : non_units)
        for (Elem b : non_units)
            if (U.is_unit(R.add(a, b))) return Check::fail({"non-units not additively closed", {{"a", a}, {"b", b}}});
    if (non_units != jacobson_radical(R).members())
        throw InvariantViolation(R.label() + ": local ring whose non-units differ from J");
    return Check::pass();
}

}  // namespace finring
