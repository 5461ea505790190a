#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finring/ring.hpp"
#include "finring/witness.hpp"

namespace finring {

/// An explicit element map between two tabulated rings.
struct RingHom {
    FiniteRing source;
    FiniteRing target;
    std::vector<Elem> map;

    Elem operator()(Elem a) const { return map.at(a); }
};

/// Smallest two-sided ideal containing `gens`.
inline ElementSubset ideal_closure(const FiniteRing& R, const std::vector<Elem>& gens) {
    const std::uint32_t n = R.order();
    std::vector<bool> mask(n, false);
    std::vector<Elem> list;
    auto push = [&](Elem x) {
        if (!mask[x]) {
            mask[x] = true;
            list.push_back(x);
        }
    };
    push(R.zero());
    for (Elem g : gens) {
        check_index(R, g);
        push(g);
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
        const Elem x = list[i];
        push(R.neg(x));
        for (Elem r = 0; r < n; ++r) {
            push(R.mul(r, x));
            push(R.mul(x, r));
        }
        for (std::size_t j = 0; j <= i; ++j) push(R.add(x, list[j]));
    }
    return ElementSubset::from_mask(std::move(mask));
}

/// Two-sided ideal test; the witness names the first closure failure.
inline Check is_two_sided_ideal(const FiniteRing& R, const ElementSubset& I) {
    if (!I.contains(R.zero())) return Check::fail({"ideal missing zero", {}});
    for (Elem a : I) {
        if (!I.contains(R.neg(a))) return Check::fail({"ideal not closed under negation", {{"a", a}}});
        for (Elem b : I)
            if (!I.contains(R.add(a, b)))
                return Check::fail({"ideal not closed under addition", {{"a", a}, {"b", b}}});
        for (Elem r = 0; r < R.order(); ++r) {
            if (!I.contains(R.mul(r, a)))
                return Check::fail({"ideal not closed under left multiplication", {{"a", a}, {"r", r}}});
            if (!I.contains(R.mul(a, r)))
                return Check::fail({"ideal not closed under right multiplication", {{"a", a}, {"r", r}}});
        }
    }
    return Check::pass();
}

struct Quotient {
    FiniteRing ring;
    RingHom projection;
};

namespace detail {

/// R/I without any verification; cosets are indexed by ascending least representative.
inline Quotient quotient_unchecked(const FiniteRing& R, const ElementSubset& I, const std::string& label) {
    const std::uint32_t n = R.order();
    constexpr Elem unset = ~Elem{0};
    std::vector<Elem> proj(n, unset);
    std::vector<Elem> reps;
    for (Elem x = 0; x < n; ++x) {
        if (proj[x] != unset) continue;
        const Elem q = static_cast<Elem>(reps.size());
        reps.push_back(x);
        for (Elem i : I) proj[R.add(x, i)] = q;
    }
    const std::uint32_t m = static_cast<std::uint32_t>(reps.size());
    std::vector<Elem> add(std::size_t(m) * m), mul(std::size_t(m) * m);
    std::vector<std::string> render(m);
    for (Elem p = 0; p < m; ++p) {
        render[p] = "[" + R.render(reps[p]) + "]";
        for (Elem q = 0; q < m; ++q) {
            add[std::size_t(p) * m + q] = proj[R.add(reps[p], reps[q])];
            mul[std::size_t(p) * m + q] = proj[R.mul(reps[p], reps[q])];
        }
    }
    auto Q = FiniteRing::from_tables(label, m, std::move(add), std::move(mul), proj[R.zero()], proj[R.one()],
                                     std::move(render));
    return {Q, RingHom{R, Q, std::move(proj)}};
}

inline std::string subset_label(const ElementSubset& I) {
    std::string s = "[";
    for (std::size_t i = 0; i < I.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(I.members()[i]);
    }
    return s + "]";
}

}  // namespace detail

}  // namespace finring
