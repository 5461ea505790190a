#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "finring/ideal.hpp"
#include "finring/structure.hpp"

namespace finring {

struct HomReport {
    /// First violated law, e.g. "map(one)=one"; empty when h is a homomorphism.
    std::optional<std::string> violation;
    std::array<Elem, 2> witness{};
    bool injective = false;
    bool surjective = false;
    /// Ker(h) subset of J(source); only meaningful when ok().
    bool kernel_in_radical = false;
    ElementSubset kernel;

    bool ok() const noexcept { return !violation.has_value(); }
    bool bijective() const noexcept { return injective && surjective; }
};

inline HomReport verify_hom(const RingHom& h) {
    const auto& S = h.source;
    const auto& T = h.target;
    if (h.map.size() != S.order())
        throw std::invalid_argument("homomorphism map has length " + std::to_string(h.map.size()) +
                                    ", source order is " + std::to_string(S.order()));
    for (Elem v : h.map)
        if (!T.valid(v)) throw std::invalid_argument("homomorphism map value out of range");

    HomReport report;
    auto fail = [&](const char* law, Elem a, Elem b) {
        report.violation = law;
        report.witness = {a, b};
        return report;
    };
    const auto& m = h.map;
    if (m[S.zero()] != T.zero()) return fail("map(zero)=zero", S.zero(), 0);
    if (m[S.one()] != T.one()) return fail("map(one)=one", S.one(), 0);
    for (Elem a = 0; a < S.order(); ++a)
        for (Elem b = 0; b < S.order(); ++b)
            if (m[S.add(a, b)] != T.add(m[a], m[b])) return fail("map(a+b)=map(a)+map(b)", a, b);
    for (Elem a = 0; a < S.order(); ++a)
        for (Elem b = 0; b < S.order(); ++b)
            if (m[S.mul(a, b)] != T.mul(m[a], m[b])) return fail("map(ab)=map(a)map(b)", a, b);

    std::vector<bool> hit(T.order(), false);
    std::vector<Elem> kernel;
    for (Elem a = 0; a < S.order(); ++a) {
        hit[m[a]] = true;
        if (m[a] == T.zero()) kernel.push_back(a);
    }
    report.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    report.injective = kernel.size() == 1;
    report.kernel = ElementSubset(S.order(), std::move(kernel));
    report.kernel_in_radical = report.kernel.subset_of(jacobson_radical(S));
    return report;
}

inline bool verify_isomorphism(const RingHom& h) {
    if (h.source.order() != h.target.order()) return false;
    const auto r = verify_hom(h);
    return r.ok() && r.bijective();
}

}  // namespace finring
