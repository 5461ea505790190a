#pragma once

/**
 * @file classify.hpp
 * @brief Clean decompositions and the clean-ring taxonomy.
 *
 * All ring-level verdicts are computed together in one pass over the
 * elements and cached on the ring. A failing verdict carries the witness
 * belonging to the least failing element; replay_witness re-checks such a
 * witness from the operation tables alone, without the structure caches.
 */

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finring/constructors.hpp"
#include "finring/ring.hpp"
#include "finring/structure.hpp"
#include "finring/witness.hpp"

namespace finring {

enum class Property {
    clean,
    uniquely_clean,
    strongly_clean,
    strongly_uniquely_clean,
    nil_clean,
    strongly_nil_clean,
    strongly_j_clean,
    exchange,
    uuc,
    cuc,
    unituc,
    boolean,
    reduced,
    abelian,
    local,
    dedekind_finite,
};

inline constexpr std::size_t kPropertyCount = 16;

inline constexpr std::array<std::string_view, kPropertyCount> kPropertyNames = {
    "clean",      "uniquely-clean",   "strongly-clean", "strongly-uniquely-clean",
    "nil-clean",  "strongly-nil-clean", "strongly-j-clean", "exchange",
    "uuc",        "cuc",              "unituc",         "boolean",
    "reduced",    "abelian",          "local",          "dedekind-finite",
};

inline std::string_view property_name(Property p) { return kPropertyNames[static_cast<std::size_t>(p)]; }

inline std::optional<Property> parse_property(std::string_view name) {
    for (std::size_t i = 0; i < kPropertyCount; ++i)
        if (kPropertyNames[i] == name) return static_cast<Property>(i);
    return std::nullopt;
}

inline std::array<Property, kPropertyCount> all_properties() {
    std::array<Property, kPropertyCount> out{};
    for (std::size_t i = 0; i < kPropertyCount; ++i) out[i] = static_cast<Property>(i);
    return out;
}

struct PropertyVerdict {
    Property property = Property::clean;
    bool holds = true;
    std::optional<Witness> witness;
};

struct Taxonomy {
    std::array<PropertyVerdict, kPropertyCount> verdicts;

    const PropertyVerdict& operator[](Property p) const { return verdicts[static_cast<std::size_t>(p)]; }
    bool holds(Property p) const { return (*this)[p].holds; }
};

struct DecompositionRecord {
    Elem element = 0;
    /// (e, u) with e idempotent, u a unit, e + u = element; ascending in e.
    std::vector<std::pair<Elem, Elem>> pairs;
    std::vector<bool> commuting;
    /// Idempotents of `pairs` grouped by conjugacy, groups ordered by least member.
    std::vector<std::vector<Elem>> conjugacy_partition;
};

inline DecompositionRecord clean_decompositions(const FiniteRing& R, Elem a) {
    check_index(R, a);
    const auto& S = structure_of(R);
    DecompositionRecord rec;
    rec.element = a;
    std::vector<std::uint32_t> seen_classes;
    for (Elem e : S.idempotents) {
        const Elem u = R.sub(a, e);
        if (!S.units.is_unit(u)) continue;
        rec.pairs.emplace_back(e, u);
        rec.commuting.push_back(R.mul(e, u) == R.mul(u, e));
        const auto cls = S.class_of[e];
        auto it = std::find(seen_classes.begin(), seen_classes.end(), cls);
        if (it == seen_classes.end()) {
            seen_classes.push_back(cls);
            rec.conjugacy_partition.push_back({e});
        } else {
            rec.conjugacy_partition[std::size_t(it - seen_classes.begin())].push_back(e);
        }
    }
    return rec;
}

inline bool element_is_clean(const FiniteRing& R, Elem a) { return !clean_decompositions(R, a).pairs.empty(); }

inline bool element_is_uniquely_clean(const FiniteRing& R, Elem a) {
    return clean_decompositions(R, a).pairs.size() == 1;
}

inline bool element_is_unituc(const FiniteRing& R, Elem a) {
    const auto rec = clean_decompositions(R, a);
    return !rec.pairs.empty() && rec.conjugacy_partition.size() == 1;
}

namespace detail {

inline Witness two_pairs(std::string reason, Elem a, std::pair<Elem, Elem> p, std::pair<Elem, Elem> q) {
    return {std::move(reason), {{"a", a}, {"e", p.first}, {"u", p.second}, {"f", q.first}, {"v", q.second}}};
}

/// Least pair of units u, v with u + v = 1, if any.
inline std::optional<std::pair<Elem, Elem>> unit_pair_summing_to_one(const FiniteRing& R, const StructureCache& S) {
    for (Elem u : S.units.units) {
        const Elem v = R.sub(R.one(), u);
        if (S.units.is_unit(v)) return std::make_pair(u, v);
    }
    return std::nullopt;
}

inline std::shared_ptr<const Taxonomy> compute_taxonomy(const FiniteRing& R) {
    const auto& S = structure_of(R);
    const std::uint32_t n = R.order();
    auto T = std::make_shared<Taxonomy>();
    for (std::size_t i = 0; i < kPropertyCount; ++i) T->verdicts[i].property = static_cast<Property>(i);

    auto fail = [&](Property p, Witness w) {
        auto& v = T->verdicts[static_cast<std::size_t>(p)];
        if (!v.holds) return;  // keep the least witness
        v.holds = false;
        v.witness = std::move(w);
    };

    std::vector<std::pair<Elem, Elem>> pairs;
    std::vector<std::pair<Elem, Elem>> commuting;
    for (Elem a = 0; a < n; ++a) {
        pairs.clear();
        commuting.clear();
        bool nil = false, strong_nil = false, strong_j = false;
        for (Elem e : S.idempotents) {
            const Elem b = R.sub(a, e);
            const bool commutes = R.mul(e, b) == R.mul(b, e);
            if (S.units.is_unit(b)) {
                pairs.emplace_back(e, b);
                if (commutes) commuting.emplace_back(e, b);
            }
            if (S.nilpotents.contains(b)) {
                nil = true;
                strong_nil |= commutes;
            }
            if (commutes && S.radical.contains(b)) strong_j = true;
        }

        if (pairs.empty()) {
            const Witness w{"not clean", {{"a", a}}};
            fail(Property::clean, w);
            fail(Property::uniquely_clean, w);
            fail(Property::unituc, w);
        } else {
            if (pairs.size() > 1) {
                fail(Property::uniquely_clean, two_pairs("two clean decompositions", a, pairs[0], pairs[1]));
                fail(Property::cuc, two_pairs("clean element with two decompositions", a, pairs[0], pairs[1]));
                if (S.units.is_unit(a))
                    fail(Property::uuc, two_pairs("unit with two clean decompositions", a, pairs[0], pairs[1]));
            }
            for (std::size_t i = 1; i < pairs.size(); ++i) {
                if (S.class_of[pairs[i].first] != S.class_of[pairs[0].first]) {
                    auto w = two_pairs("non-conjugate clean decompositions", a, pairs[0], pairs[i]);
                    if (auto up = unit_pair_summing_to_one(R, S)) {
                        w.elements.emplace_back("unit_u", up->first);
                        w.elements.emplace_back("unit_v", up->second);
                    }
                    fail(Property::unituc, std::move(w));
                    break;
                }
            }
        }
        if (commuting.empty()) {
            const Witness w{"no commuting clean decomposition", {{"a", a}}};
            fail(Property::strongly_clean, w);
            fail(Property::strongly_uniquely_clean, w);
        } else if (commuting.size() > 1) {
            fail(Property::strongly_uniquely_clean,
                 two_pairs("two commuting clean decompositions", a, commuting[0], commuting[1]));
        }
        if (!nil) fail(Property::nil_clean, {"not nil-clean", {{"a", a}}});
        if (!strong_nil) fail(Property::strongly_nil_clean, {"not strongly nil-clean", {{"a", a}}});
        if (!strong_j) fail(Property::strongly_j_clean, {"not strongly J-clean", {{"a", a}}});
    }

    // exchange: some idempotent e with e in Ra and 1 - e in R(1 - a)
    {
        std::vector<char> left_a(n), left_b(n);
        for (Elem a = 0; a < n; ++a) {
            std::fill(left_a.begin(), left_a.end(), 0);
            std::fill(left_b.begin(), left_b.end(), 0);
            const Elem b = R.sub(R.one(), a);
            for (Elem r = 0; r < n; ++r) {
                left_a[R.mul(r, a)] = 1;
                left_b[R.mul(r, b)] = 1;
            }
            bool found = false;
            for (Elem e : S.idempotents)
                if (left_a[e] && left_b[R.sub(R.one(), e)]) {
                    found = true;
                    break;
                }
            if (!found) {
                fail(Property::exchange, {"no exchange idempotent", {{"a", a}}});
                break;
            }
        }
    }

    for (Elem a = 0; a < n && T->holds(Property::dedekind_finite); ++a)
        for (Elem b = 0; b < n; ++b)
            if (R.mul(a, b) == R.one() && R.mul(b, a) != R.one()) {
                fail(Property::dedekind_finite, {"one-sided inverse", {{"a", a}, {"b", b}}});
                break;
            }

    auto copy = [&](Property p, const Check& c) {
        if (!c.holds) fail(p, *c.witness);
    };
    copy(Property::boolean, is_boolean(R));
    copy(Property::reduced, is_reduced(R));
    copy(Property::abelian, is_abelian(R));
    copy(Property::local, is_local(R));
    return T;
}

}  // namespace detail

inline const Taxonomy& taxonomy(const FiniteRing& R) {
    auto& c = R.caches();
    std::call_once(c.taxonomy_once, [&] { c.taxonomy = detail::compute_taxonomy(R); });
    return *c.taxonomy;
}

inline const PropertyVerdict& has_property(const FiniteRing& R, Property p) { return taxonomy(R)[p]; }

/// Independent characterization: exchange and Boolean modulo the radical.
inline bool unituc_oracle(const FiniteRing& R) {
    if (!has_property(R, Property::exchange).holds) return false;
    const auto q = quotient_ring(R, jacobson_radical(R));
    return is_boolean(q.ring).holds;
}

/// Facts consumed by the implication audit; separated so that tests can feed
/// inconsistent verdicts.
struct AuditFacts {
    std::array<bool, kPropertyCount> holds{};
    bool two_in_radical = false;
    bool quotient_boolean = false;

    bool operator[](Property p) const { return holds[static_cast<std::size_t>(p)]; }
};

inline AuditFacts audit_facts(const FiniteRing& R) {
    AuditFacts f;
    const auto& T = taxonomy(R);
    for (std::size_t i = 0; i < kPropertyCount; ++i) f.holds[i] = T.verdicts[i].holds;
    f.two_in_radical = jacobson_radical(R).contains(R.integer(2));
    f.quotient_boolean = is_boolean(quotient_ring(R, jacobson_radical(R)).ring).holds;
    return f;
}

inline std::vector<std::string> audit_implications(const AuditFacts& f, const std::string& label) {
    std::vector<std::string> out;
    auto arrow = [&](bool premise, bool conclusion, const char* name) {
        if (premise && !conclusion) out.push_back(label + ": " + name);
    };
    using P = Property;
    arrow(f[P::uniquely_clean], f[P::strongly_uniquely_clean], "uniquely-clean => strongly-uniquely-clean");
    arrow(f[P::strongly_uniquely_clean], f[P::unituc], "strongly-uniquely-clean => unituc");
    arrow(f[P::unituc], f[P::uuc], "unituc => uuc");
    arrow(f[P::strongly_nil_clean], f[P::strongly_uniquely_clean], "strongly-nil-clean => strongly-uniquely-clean");
    arrow(f[P::cuc], f[P::uuc], "cuc => uuc");
    arrow(f[P::unituc], f.two_in_radical, "unituc => 2 in J(R)");
    arrow(f[P::unituc], f[P::dedekind_finite], "unituc => dedekind-finite");
    arrow(f[P::unituc], f.quotient_boolean, "unituc => R/J(R) boolean");
    arrow(f[P::boolean], f[P::unituc], "boolean => unituc");
    return out;
}

inline std::vector<std::string> implication_audit(const FiniteRing& R) {
    return audit_implications(audit_facts(R), R.label());
}

// Witness replay from the tables alone.

namespace detail {

inline std::optional<Elem> inverse_by_scan(const FiniteRing& R, Elem a) {
    for (Elem b = 0; b < R.order(); ++b)
        if (R.mul(a, b) == R.one() && R.mul(b, a) == R.one()) return b;
    return std::nullopt;
}

inline bool idem(const FiniteRing& R, Elem e) { return R.mul(e, e) == e; }

inline bool conjugate_by_scan(const FiniteRing& R, Elem e, Elem f) {
    for (Elem u = 0; u < R.order(); ++u)
        if (auto inv = inverse_by_scan(R, u); inv && R.mul(R.mul(*inv, f), u) == e) return true;
    return false;
}

inline bool clean_pair(const FiniteRing& R, Elem a, Elem e, Elem u) {
    return idem(R, e) && inverse_by_scan(R, u) && R.add(e, u) == a;
}

inline bool is_nilpotent_by_scan(const FiniteRing& R, Elem x) {
    Elem p = x;
    for (std::uint32_t k = 0; k <= R.order(); ++k, p = R.mul(p, x))
        if (p == R.zero()) return true;
    return false;
}

inline bool in_radical_by_scan(const FiniteRing& R, Elem x) {
    for (Elem r = 0; r < R.order(); ++r)
        if (!inverse_by_scan(R, R.sub(R.one(), R.mul(r, x)))) return false;
    return true;
}

/// Every idempotent e with a - e satisfying `ok(e, a - e)` is absent.
template <class Pred>
bool no_decomposition(const FiniteRing& R, Elem a, Pred ok) {
    for (Elem e = 0; e < R.order(); ++e)
        if (idem(R, e) && ok(e, R.sub(a, e))) return false;
    return true;
}

}  // namespace detail

/// True iff `w` demonstrates that property `p` fails in R.
inline bool replay_witness(const FiniteRing& R, Property p, const Witness& w) {
    using namespace detail;
    auto commutes = [&](Elem x, Elem y) { return R.mul(x, y) == R.mul(y, x); };
    auto is_unit = [&](Elem x) { return inverse_by_scan(R, x).has_value(); };
    try {
        const std::string& why = w.reason;
        if (why == "not clean") return no_decomposition(R, w.at("a"), [&](Elem, Elem u) { return is_unit(u); });
        if (why == "two clean decompositions" || why == "clean element with two decompositions" ||
            why == "unit with two clean decompositions") {
            const Elem a = w.at("a");
            if (why == "unit with two clean decompositions" && !is_unit(a)) return false;
            return w.at("e") != w.at("f") && clean_pair(R, a, w.at("e"), w.at("u")) &&
                   clean_pair(R, a, w.at("f"), w.at("v"));
        }
        if (why == "non-conjugate clean decompositions") {
            const Elem a = w.at("a");
            bool ok = clean_pair(R, a, w.at("e"), w.at("u")) && clean_pair(R, a, w.at("f"), w.at("v")) &&
                      !conjugate_by_scan(R, w.at("e"), w.at("f"));
            if (auto u = w.get("unit_u")) ok = ok && is_unit(*u) && is_unit(w.at("unit_v")) &&
                                               R.add(*u, w.at("unit_v")) == R.one();
            return ok;
        }
        if (why == "no commuting clean decomposition")
            return no_decomposition(R, w.at("a"), [&](Elem e, Elem u) { return is_unit(u) && commutes(e, u); });
        if (why == "two commuting clean decompositions") {
            const Elem a = w.at("a");
            return w.at("e") != w.at("f") && clean_pair(R, a, w.at("e"), w.at("u")) &&
                   clean_pair(R, a, w.at("f"), w.at("v")) && commutes(w.at("e"), w.at("u")) &&
                   commutes(w.at("f"), w.at("v"));
        }
        if (why == "not nil-clean")
            return no_decomposition(R, w.at("a"), [&](Elem, Elem b) { return is_nilpotent_by_scan(R, b); });
        if (why == "not strongly nil-clean")
            return no_decomposition(R, w.at("a"),
                                    [&](Elem e, Elem b) { return commutes(e, b) && is_nilpotent_by_scan(R, b); });
        if (why == "not strongly J-clean")
            return no_decomposition(R, w.at("a"),
                                    [&](Elem e, Elem b) { return commutes(e, b) && in_radical_by_scan(R, b); });
        if (why == "no exchange idempotent") {
            const Elem a = w.at("a");
            const Elem b = R.sub(R.one(), a);
            for (Elem e = 0; e < R.order(); ++e) {
                if (!idem(R, e)) continue;
                bool in_ra = false, in_rb = false;
                for (Elem r = 0; r < R.order(); ++r) {
                    in_ra |= R.mul(r, a) == e;
                    in_rb |= R.mul(r, b) == R.sub(R.one(), e);
                }
                if (in_ra && in_rb) return false;
            }
            return true;
        }
        if (why == "one-sided inverse")
            return R.mul(w.at("a"), w.at("b")) == R.one() && R.mul(w.at("b"), w.at("a")) != R.one();
        if (why == "x*x != x") return R.mul(w.at("x"), w.at("x")) != w.at("x");
        if (why == "nonzero nilpotent") return w.at("x") != R.zero() && is_nilpotent_by_scan(R, w.at("x"));
        if (why == "non-central idempotent")
            return idem(R, w.at("e")) && !commutes(w.at("e"), w.at("r"));
        if (why == "non-units not additively closed")
            return !is_unit(w.at("a")) && !is_unit(w.at("b")) && is_unit(R.add(w.at("a"), w.at("b")));
    } catch (const std::out_of_range&) {
        return false;
    }
    (void)p;
    return false;
}

}  // namespace finring
