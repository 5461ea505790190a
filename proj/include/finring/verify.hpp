#pragma once

/**
 * @file verify.hpp
 * @brief Theorem registry run over a corpus of small rings.
 *
 * Each registered theorem is a check applied to every corpus ring it is
 * relevant for. Some checks construct further rings from a corpus ring (the
 * T_n, K_s, M_n(R;s), S_n and family grids); those derived rings are skipped
 * with a note when their order is above the cap, or above
 * kDerivedOrderBudget and not already part of the corpus.
 *
 * Results are collected per (theorem, corpus ring) slot, so the report does
 * not depend on the number of worker threads.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "finring/classify.hpp"
#include "finring/constructors.hpp"
#include "finring/dsl.hpp"
#include "finring/hom.hpp"
#include "finring/json_io.hpp"
#include "finring/structure.hpp"

namespace finring {

inline constexpr std::uint64_t kDerivedOrderBudget = 1024;

struct CorpusEntry {
    std::string id;
    std::string expr;
    std::map<Property, bool> expected;
    /// Justification per expected property.
    std::map<Property, std::string> provenance;
    /// Ring used instead of evaluating `expr` (fault-injection fixtures).
    std::optional<FiniteRing> fixture;
};

struct TheoremCheckResult {
    std::string theorem_id;
    std::string ring_id;
    /// Corpus entry the check was run for; differs from ring_id for derived rings.
    std::string corpus_ring;
    bool passed = true;
    bool skipped = false;
    std::string note;
    /// Present iff passed is false.
    std::optional<nlohmann::json> witness;
    /// Supporting data for passing checks (e.g. the unit pair behind EX-MAT).
    nlohmann::json evidence;
    double ms = 0;
};

/// Thread-safe memo of evaluated expressions, keyed by canonical text.
class RingPool {
public:
    FiniteRing get(const std::string& text) { return get(parse_expr(text)); }

    FiniteRing get(const Expr& e) {
        const auto key = render(e);
        std::shared_ptr<Slot> slot;
        {
            std::lock_guard lock(mu_);
            auto& s = slots_[key];
            if (!s) s = std::make_shared<Slot>();
            slot = s;
        }
        std::call_once(slot->once, [&] { slot->ring = eval_expr(e); });
        return *slot->ring;
    }

private:
    struct Slot {
        std::once_flag once;
        std::optional<FiniteRing> ring;
    };
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<Slot>> slots_;
};

/// A corpus entry together with its ring and parsed expression.
struct CorpusRing {
    const CorpusEntry* entry = nullptr;
    FiniteRing ring;
    std::optional<Expr> expr;

    const std::string& id() const { return entry->id; }
};

struct VerifyContext {
    RingPool& pool;
    std::set<std::string> corpus_exprs;  // canonical texts
};

using TheoremFn = std::function<std::vector<TheoremCheckResult>(const CorpusRing&, VerifyContext&)>;

struct Theorem {
    std::string id;
    std::string summary;
    TheoremFn check;
};

namespace detail::verify {

using nlohmann::json;

inline bool unituc(const FiniteRing& R) { return has_property(R, Property::unituc).holds; }

inline TheoremCheckResult pass(std::string ring, json evidence = nullptr) {
    TheoremCheckResult r;
    r.ring_id = std::move(ring);
    r.evidence = std::move(evidence);
    return r;
}

inline TheoremCheckResult fail(std::string ring, json witness) {
    TheoremCheckResult r;
    r.ring_id = std::move(ring);
    r.passed = false;
    r.witness = std::move(witness);
    return r;
}

inline TheoremCheckResult skip(std::string ring, std::string note) {
    TheoremCheckResult r;
    r.ring_id = std::move(ring);
    r.skipped = true;
    r.note = std::move(note);
    return r;
}

inline json elements(std::string reason, std::initializer_list<std::pair<const char*, Elem>> xs) {
    json j = {{"reason", std::move(reason)}};
    for (const auto& [k, v] : xs) j[k] = v;
    return j;
}

/// Passes when every named verdict agrees.
inline TheoremCheckResult agree(std::string ring, const std::vector<std::pair<std::string, bool>>& verdicts,
                                std::string reason) {
    json v = json::object();
    bool all_same = true;
    for (const auto& [name, value] : verdicts) {
        v[name] = value;
        all_same &= value == verdicts.front().second;
    }
    if (all_same) return pass(std::move(ring), v);
    return fail(std::move(ring), {{"reason", std::move(reason)}, {"verdicts", v}});
}

/// premise => conclusion.
inline TheoremCheckResult implies(std::string ring, bool premise, bool conclusion, std::string reason,
                                  json detail = json::object()) {
    if (!premise || conclusion) return pass(std::move(ring));
    detail["reason"] = std::move(reason);
    return fail(std::move(ring), std::move(detail));
}

struct Derived {
    std::string expr;
    std::optional<FiniteRing> ring;
    std::string note;
};

/// Evaluates `text` through the pool unless its order is above the cap, or
/// above the derived-ring budget for rings outside the corpus.
inline Derived derive(VerifyContext& ctx, const std::string& text) {
    const auto e = parse_expr(text);
    Derived d{render(e), std::nullopt, {}};
    const auto order = expr_order(e);
    if (order > max_order())
        d.note = "order " + std::to_string(order) + " exceeds cap " + std::to_string(max_order());
    else if (order > kDerivedOrderBudget && !ctx.corpus_exprs.count(d.expr))
        d.note = "order " + std::to_string(order) + " above derived-ring budget " + std::to_string(kDerivedOrderBudget);
    else
        d.ring = ctx.pool.get(e);
    return d;
}

inline std::string canon(const CorpusRing& cr) { return render(*cr.expr); }

/// Base rings for grid constructions: corpus rings of order at most 4 given by an expression.
inline bool grid_base(const CorpusRing& cr) { return cr.expr && cr.ring.order() <= 4; }

inline std::vector<Elem> class_representatives(const FiniteRing& R) {
    std::vector<Elem> reps;
    for (const auto& cls : idempotent_conjugacy_classes(R)) reps.push_back(cls.front());
    return reps;
}

inline std::vector<Elem> central_elements(const FiniteRing& R) { return center(R).members(); }

/// Units of eRe, as parent indices, and the membership mask of eRe.
struct CornerUnits {
    std::vector<bool> in_corner;
    std::vector<bool> unit;
};

inline CornerUnits corner_units(const FiniteRing& R, Elem e) {
    CornerUnits c{std::vector<bool>(R.order(), false), std::vector<bool>(R.order(), false)};
    if (e == R.one()) {
        c.in_corner.assign(R.order(), true);
        for (Elem u : units(R).units) c.unit[u] = true;
        return c;
    }
    std::vector<Elem> members;
    for (Elem x = 0; x < R.order(); ++x) {
        const Elem y = R.mul(R.mul(e, x), e);
        if (!c.in_corner[y]) {
            c.in_corner[y] = true;
            members.push_back(y);
        }
    }
    for (Elem x : members) {
        if (c.unit[x]) continue;
        for (Elem y : members)
            if (R.mul(x, y) == e && R.mul(y, x) == e) {
                c.unit[x] = c.unit[y] = true;
                break;
            }
    }
    return c;
}

inline std::vector<ElementSubset> ideals_in_radical(const FiniteRing& R) {
    const auto& J = jacobson_radical(R);
    std::vector<ElementSubset> out;
    auto add = [&](ElementSubset I) {
        for (const auto& x : out)
            if (x == I) return;
        out.push_back(std::move(I));
    };
    add(ElementSubset(R.order(), {R.zero()}));
    if (J.size() <= 8) {
        const auto& m = J.members();
        for (std::uint32_t mask = 1; mask < (1u << m.size()); ++mask) {
            std::vector<Elem> gens;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (mask >> i & 1u) gens.push_back(m[i]);
            add(ideal_closure(R, gens));
        }
    } else {
        add(J);
    }
    return out;
}

/// R/I, reusing R itself when I = {0}.
inline FiniteRing quotient_or_self(const FiniteRing& R, const ElementSubset& I) {
    if (I.size() == 1) return R;
    return quotient_ring(R, I).ring;
}

// Theorem checks.

inline std::vector<TheoremCheckResult> lem_prod(const CorpusRing& cr, VerifyContext& ctx,
                                                const std::vector<std::pair<std::string, std::string>>& samples,
                                                const std::map<std::string, std::string>& exprs) {
    std::vector<TheoremCheckResult> out;
    if (!cr.expr) return out;
    auto check = [&](const std::string& id, const FiniteRing& P, const std::vector<FiniteRing>& factors) {
        bool all = true;
        std::vector<std::pair<std::string, bool>> v{{"product", unituc(P)}};
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const bool u = unituc(factors[i]);
            all &= u;
        }
        v.emplace_back("all factors", all);
        out.push_back(agree(id, v, "product verdict differs from factor verdicts"));
    };
    if (cr.expr->kind == ExprKind::Prod) {
        std::vector<FiniteRing> factors;
        for (const auto& f : cr.expr->rings) factors.push_back(ctx.pool.get(f));
        check(cr.id(), cr.ring, factors);
    }
    for (const auto& [a, b] : samples) {
        if (a != cr.id() || !exprs.count(b)) continue;
        auto d = derive(ctx, "Prod(" + canon(cr) + "," + exprs.at(b) + ")");
        if (!d.ring) {
            out.push_back(skip(d.expr, d.note));
            continue;
        }
        check(d.expr, *d.ring, {cr.ring, ctx.pool.get(exprs.at(b))});
    }
    return out;
}

/// e - f = u a unit implies u^-1 (1 - e) u = f. Uses raw scans so that it
/// also runs on unvalidated fixtures.
inline std::vector<TheoremCheckResult> lem_conj(const CorpusRing& cr, VerifyContext&) {
    const auto& R = cr.ring;
    const auto U = detail::compute_units(R);
    const auto Id = detail::compute_idempotents(R);
    for (Elem e : Id)
        for (Elem f : Id) {
            const Elem u = R.sub(e, f);
            if (!U.is_unit(u)) continue;
            if (R.mul(R.mul(U.inverse[u], R.sub(R.one(), e)), u) != f)
                return {fail(cr.id(), elements("u^-1(1-e)u != f", {{"e", e}, {"f", f}, {"u", u}}))};
        }
    return {pass(cr.id())};
}

inline std::vector<TheoremCheckResult> ex_elt(const CorpusRing& cr, VerifyContext&) {
    const auto& R = cr.ring;
    for (Elem e : idempotents(R))
        if (!element_is_unituc(R, e)) return {fail(cr.id(), elements("idempotent is not unit-uniquely clean", {{"x", e}}))};
    for (Elem q : nilpotents(R))
        if (center(R).contains(q) && !element_is_unituc(R, q))
            return {fail(cr.id(), elements("central nilpotent is not unit-uniquely clean", {{"x", q}}))};
    return {pass(cr.id())};
}

inline std::vector<TheoremCheckResult> lem_ere(const CorpusRing& cr, VerifyContext&) {
    const auto& R = cr.ring;
    if (!unituc(R)) return {};
    for (Elem e : idempotents(R)) {
        const Elem ce = R.sub(R.one(), e);
        for (Elem r = 0; r < R.order(); ++r) {
            const Elem f = R.add(e, R.mul(R.mul(e, r), ce));
            const Elem g = R.add(e, R.mul(R.mul(ce, r), e));
            for (Elem x : {f, g})
                if (!is_idempotent(R, x) || !same_conjugacy_class(R, e, x))
                    return {fail(cr.id(), elements("e + er(1-e) or e + (1-e)re not conjugate to e",
                                                   {{"e", e}, {"r", r}, {"f", x}}))};
        }
    }
    return {pass(cr.id())};
}

inline std::vector<TheoremCheckResult> cor_abel(const CorpusRing& cr, VerifyContext&) {
    const auto& R = cr.ring;
    const bool lhs = has_property(R, Property::abelian).holds && unituc(R);
    return {agree(cr.id(), {{"abelian unituc", lhs}, {"uniquely-clean", has_property(R, Property::uniquely_clean).holds}},
                  "abelian unituc differs from uniquely clean")};
}

inline std::vector<TheoremCheckResult> prop_imp(const CorpusRing& cr, VerifyContext&) {
    const auto& R = cr.ring;
    if (!unituc(R)) return {};
    const auto& U = units(R);
    const auto& Id = idempotents(R);
    // (1), (2): no two units sum to a nonzero idempotent.
    for (Elem u : U.units)
        for (Elem e : Id) {
            if (e == R.zero()) continue;
            const Elem v = R.sub(e, u);
            if (U.is_unit(v)) return {fail(cr.id(), elements("u + v = e", {{"u", u}, {"v", v}, {"e", e}}))};
        }
    // (3), (4): likewise for units of eRe; conjugate idempotents give conjugate corners.
    for (Elem e : class_representatives(R)) {
        if (e == R.zero()) continue;
        const auto C = corner_units(R, e);
        for (Elem u = 0; u < R.order(); ++u) {
            if (!C.unit[u]) continue;
            for (Elem f : Id) {
                if (f == R.zero()) continue;
                const Elem v = R.sub(f, u);
                if (C.in_corner[v] && C.unit[v])
                    return {fail(cr.id(), elements("u + v = f with u, v units of eRe",
                                                   {{"e", e}, {"u", u}, {"v", v}, {"f", f}}))};
            }
        }
    }
    // (5): R/I is unituc for ideals I inside J.
    json sizes = json::array();
    for (const auto& I : ideals_in_radical(R)) {
        sizes.push_back(I.size());
        if (!unituc(quotient_or_self(R, I)))
            return {fail(cr.id(), {{"reason", "R/I not unituc for an ideal I inside J"}, {"ideal", I.members()}})};
    }
    return {pass(cr.id(), {{"ideal_sizes", sizes}})};
}

/// Expected false: M_2(S) is never unituc. The unit pair u + v = 1 is kept as evidence.
inline std::vector<TheoremCheckResult> ex_mat(const CorpusRing& cr, VerifyContext&) {
    if (!cr.expr || cr.expr->kind != ExprKind::M || cr.expr->ints[0] < 2) return {};
    const auto& v = has_property(cr.ring, Property::unituc);
    if (v.holds) return {fail(cr.id(), {{"reason", "matrix ring classified unituc"}})};
    json evidence = to_json(*v.witness);
    if (!v.witness->get("unit_u")) return {fail(cr.id(), {{"reason", "no unit pair summing to one"}, {"verdict", evidence}})};
    return {pass(cr.id(), evidence)};
}

inline std::vector<TheoremCheckResult> lem_2j(const CorpusRing& cr, VerifyContext&) {
    const auto& R = cr.ring;
    if (!unituc(R)) return {};
    const Elem two = R.integer(2);
    return {implies(cr.id(), true, jacobson_radical(R).contains(two), "2 not in J(R)", {{"two", two}})};
}

/// Quotient maps R -> R/I with I inside J: unituc passes down, and back up since R is clean.
inline std::vector<TheoremCheckResult> lem_epi(const CorpusRing& cr, VerifyContext&) {
    const auto& R = cr.ring;
    const auto& J = jacobson_radical(R);
    if (J.size() == 1) return {};
    std::vector<ElementSubset> ideals{J};
    const auto small = ideal_closure(R, {J.members()[1]});
    if (!(small == J)) ideals.push_back(small);
    for (const auto& I : ideals) {
        const auto q = quotient_ring(R, I);
        const auto rep = verify_hom(q.projection);
        if (!rep.ok() || !rep.surjective || !rep.kernel_in_radical)
            return {fail(cr.id(), {{"reason", "projection is not an epimorphism with kernel in J"}, {"ideal", I.members()}})};
        const bool r = unituc(R), s = unituc(q.ring), clean = has_property(R, Property::clean).holds;
        if (r && !s) return {fail(cr.id(), {{"reason", "R unituc but R/I not"}, {"ideal", I.members()}})};
        if (s && clean && !r) return {fail(cr.id(), {{"reason", "R/I unituc and R clean but R not"}, {"ideal", I.members()}})};
    }
    return {pass(cr.id())};
}

inline std::vector<TheoremCheckResult> prop_tri(const CorpusRing& cr, VerifyContext& ctx) {
    if (!cr.expr) return {};
    std::vector<TheoremCheckResult> out;
    if (cr.expr->kind == ExprKind::T) {
        const auto base = ctx.pool.get(cr.expr->rings[0]);
        out.push_back(agree(cr.id(), {{"R", unituc(base)}, {"T_n(R)", unituc(cr.ring)}}, "T_n(R) verdict differs from R"));
    }
    if (grid_base(cr)) {
        std::vector<std::pair<std::string, bool>> v{{"R", unituc(cr.ring)}};
        std::string notes;
        for (int n = 1; n <= 3; ++n) {
            auto d = derive(ctx, "T(" + std::to_string(n) + "," + canon(cr) + ")");
            if (d.ring)
                v.emplace_back(d.expr, unituc(*d.ring));
            else
                notes += (notes.empty() ? "" : "; ") + d.expr + ": " + d.note;
        }
        auto r = agree(cr.id() + " T_1..T_3", v, "T_n verdicts disagree");
        r.note = notes;
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<TheoremCheckResult> thm_bool(const CorpusRing& cr, VerifyContext&) {
    const auto& R = cr.ring;
    if (!unituc(R)) return {pass(cr.id())};
    const auto Q = quotient_or_self(R, jacobson_radical(R));
    const auto b = is_boolean(Q);
    return {implies(cr.id(), true, b.holds, "R/J(R) not Boolean", b.holds ? json::object() : to_json(*b.witness))};
}

inline std::vector<TheoremCheckResult> cor_nil(const CorpusRing& cr, VerifyContext&) {
    const auto& T = taxonomy(cr.ring);
    return {agree(cr.id(),
                  {{"unituc", T.holds(Property::unituc)},
                   {"strongly-nil-clean", T.holds(Property::strongly_nil_clean)},
                   {"strongly-uniquely-clean", T.holds(Property::strongly_uniquely_clean)},
                   {"strongly-j-clean", T.holds(Property::strongly_j_clean)}},
                  "four-way equivalence broken")};
}

inline std::vector<TheoremCheckResult> thm_div(const CorpusRing& cr, VerifyContext&) {
    const auto& R = cr.ring;
    const auto& U = units(R);
    const auto& J = jacobson_radical(R);
    const bool u = unituc(R);
    const bool division = U.units.size() + 1 == R.order();
    const bool local = has_property(R, Property::local).holds;
    const bool semisimple = J.size() == 1;
    if (!division && !local && !semisimple) return {};
    json v = {{"unituc", u}};
    if (division) {
        v["division"] = true;
        if (u != (R.order() == 2)) return {fail(cr.id(), {{"reason", "division ring: unituc iff F2 broken"}, {"verdicts", v}})};
    }
    if (local) {
        const auto residue = R.order() / J.size();
        v["residue_order"] = residue;
        if (u != (residue == 2)) return {fail(cr.id(), {{"reason", "local ring: unituc iff R/J = F2 broken"}, {"verdicts", v}})};
    }
    if (semisimple) {
        const bool b = is_boolean(R).holds;
        v["boolean"] = b;
        if (u != b) return {fail(cr.id(), {{"reason", "J = 0: unituc iff Boolean broken"}, {"verdicts", v}})};
    }
    return {pass(cr.id(), v)};
}

inline std::vector<TheoremCheckResult> thm_grp(const CorpusRing& cr, VerifyContext& ctx) {
    if (!cr.expr || cr.expr->kind != ExprKind::GR) return {};
    const auto base = ctx.pool.get(cr.expr->rings[0]);
    const auto G = eval_group(cr.expr->groups[0]);
    const auto gr = group_ring(base, G);
    std::vector<Elem> gens;
    for (std::uint32_t g = 0; g < G.order; ++g) gens.push_back(gr.ring.sub(gr.ring.one(), gr.basis(g)));
    if (!(ideal_closure(gr.ring, gens) == gr.augmentation_ideal))
        return {fail(cr.id(), {{"reason", "augmentation ideal differs from the ideal generated by 1 - g"}})};
    const bool rg = unituc(cr.ring), r = unituc(base), two = G.is_two_group();
    json v = {{"RG", rg}, {"R", r}, {"2-group", two}};
    if (rg) {
        const bool delta_in_j = gr.augmentation_ideal.subset_of(jacobson_radical(cr.ring));
        v["delta_in_J"] = delta_in_j;
        if (!r || !two || !delta_in_j) return {fail(cr.id(), {{"reason", "RG unituc without R unituc, 2-group and delta in J"}, {"verdicts", v}})};
    }
    if (r && two && !rg) return {fail(cr.id(), {{"reason", "R unituc and G a 2-group but RG not unituc"}, {"verdicts", v}})};
    return {pass(cr.id(), v)};
}

inline std::vector<TheoremCheckResult> thm_char(const CorpusRing& cr, VerifyContext&) {
    return {agree(cr.id(), {{"unituc", unituc(cr.ring)}, {"exchange and R/J Boolean", unituc_oracle(cr.ring)}},
                  "definition and characterization disagree")};
}

inline std::vector<TheoremCheckResult> lem_corner(const CorpusRing& cr, VerifyContext&) {
    const auto& R = cr.ring;
    if (!unituc(R)) return {};
    const auto list = R.order() <= 1024 ? idempotents(R).members() : class_representatives(R);
    std::size_t checked_count = 0;
    for (Elem e : list) {
        if (e == R.zero() || e == R.one()) continue;
        ++checked_count;
        if (!unituc(corner_ring(R, e))) return {fail(cr.id(), elements("eRe not unituc", {{"e", e}}))};
    }
    return {pass(cr.id(), {{"corners", checked_count}})};
}

inline std::vector<TheoremCheckResult> prop_df(const CorpusRing& cr, VerifyContext&) {
    const auto& R = cr.ring;
    if (!unituc(R)) return {};
    const auto& d = has_property(R, Property::dedekind_finite);
    return {implies(cr.id(), true, d.holds, "unituc ring not Dedekind finite",
                    d.holds ? json::object() : to_json(*d.witness))};
}

inline std::vector<TheoremCheckResult> thm_mor_peirce(const CorpusRing& cr, VerifyContext&) {
    const auto& R = cr.ring;
    const auto& J = jacobson_radical(R);
    std::vector<TheoremCheckResult> out;
    bool any = false;
    for (Elem e : class_representatives(R)) {
        if (e == R.zero() || e == R.one()) continue;
        any = true;
        const Elem f = R.sub(R.one(), e);
        bool off_in_j = true;
        for (Elem r = 0; r < R.order() && off_in_j; ++r)
            off_in_j = J.contains(R.mul(R.mul(e, r), f)) && J.contains(R.mul(R.mul(f, r), e));
        const bool rhs = unituc(corner_ring(R, e)) && unituc(corner_ring(R, f)) && off_in_j;
        if (rhs != unituc(R))
            return {fail(cr.id(), {{"reason", "Peirce criterion disagrees with unituc"}, {"e", e}, {"criterion", rhs}})};
    }
    if (!any) return {};
    return {pass(cr.id())};
}

/// U(K_s(R)) == U(R) and s in J(R).
inline TheoremCheckResult ks_criterion(const std::string& id, const FiniteRing& K, const FiniteRing& R, Elem s) {
    return agree(id, {{"K_s(R)", unituc(K)}, {"R unituc and s in J", unituc(R) && jacobson_radical(R).contains(s)}},
                 "K_s(R) criterion broken");
}

inline std::vector<TheoremCheckResult> cor_ks(const CorpusRing& cr, VerifyContext& ctx) {
    if (!cr.expr) return {};
    std::vector<TheoremCheckResult> out;
    if (cr.expr->kind == ExprKind::Ks) {
        const auto base = ctx.pool.get(cr.expr->rings[0]);
        out.push_back(ks_criterion(cr.id(), cr.ring, base, static_cast<Elem>(cr.expr->ints[0])));
    }
    if (grid_base(cr))
        for (Elem s : central_elements(cr.ring)) {
            auto d = derive(ctx, "Ks(" + canon(cr) + "," + std::to_string(s) + ")");
            out.push_back(d.ring ? ks_criterion(d.expr, *d.ring, cr.ring, s) : skip(d.expr, d.note));
        }
    return out;
}

inline std::vector<TheoremCheckResult> mns_check(VerifyContext& ctx, const std::string& id, const FiniteRing& M,
                                                 const FiniteRing& R, const std::string& base_expr, std::uint64_t n,
                                                 Elem s) {
    auto r = agree(id, {{"M_n(R;s)", unituc(M)}, {"R unituc and s in J", unituc(R) && jacobson_radical(R).contains(s)}},
                   "M_n(R;s) criterion broken");
    if (n == 2 && r.passed) {
        auto k = derive(ctx, "Ks(" + base_expr + "," + std::to_string(R.mul(s, s)) + ")");
        if (k.ring) {
            std::vector<Elem> id_map(M.order());
            for (Elem a = 0; a < M.order(); ++a) id_map[a] = a;
            if (!verify_isomorphism(RingHom{M, *k.ring, id_map}))
                return {fail(id, {{"reason", "M_2(R;s) is not K_{s^2}(R) under the coordinate identity"}})};
            r.evidence["iso"] = k.expr;
        }
    }
    return {r};
}

inline std::vector<TheoremCheckResult> thm_mns(const CorpusRing& cr, VerifyContext& ctx) {
    if (!cr.expr) return {};
    std::vector<TheoremCheckResult> out;
    if (cr.expr->kind == ExprKind::MnS) {
        const auto& inner = cr.expr->rings[0];
        for (auto& r : mns_check(ctx, cr.id(), cr.ring, ctx.pool.get(inner), render(inner), cr.expr->ints[0],
                                 static_cast<Elem>(cr.expr->ints[1])))
            out.push_back(std::move(r));
    }
    if (grid_base(cr))
        for (std::uint64_t n : {2, 3})
            for (Elem s : central_elements(cr.ring)) {
                auto d = derive(ctx, "MnS(" + std::to_string(n) + "," + canon(cr) + "," + std::to_string(s) + ")");
                if (!d.ring) {
                    out.push_back(skip(d.expr, d.note));
                    continue;
                }
                for (auto& r : mns_check(ctx, d.expr, *d.ring, cr.ring, canon(cr), n, s)) out.push_back(std::move(r));
            }
    return out;
}

inline std::vector<Elem> identity_map(std::uint32_t n) {
    std::vector<Elem> m(n);
    for (Elem a = 0; a < n; ++a) m[a] = a;
    return m;
}

inline std::vector<TheoremCheckResult> prop_text(const CorpusRing& cr, VerifyContext& ctx) {
    if (!cr.expr) return {};
    std::vector<TheoremCheckResult> out;
    if (cr.expr->kind == ExprKind::TrivExt)
        out.push_back(agree(cr.id(), {{"R", unituc(ctx.pool.get(cr.expr->rings[0]))}, {"T(R,R^k)", unituc(cr.ring)}},
                            "trivial extension verdict differs from R"));
    if (grid_base(cr)) {
        const auto b = canon(cr);
        std::vector<std::pair<std::string, bool>> v{{"R", unituc(cr.ring)}};
        std::optional<FiniteRing> t1, p2;
        std::string notes;
        for (const auto& text : {"TrivExt(" + b + ",1)", "TrivExt(" + b + ",2)", "PolyQuot(" + b + ",2)"}) {
            auto d = derive(ctx, text);
            if (!d.ring) {
                notes += d.expr + ": " + d.note + "; ";
                continue;
            }
            v.emplace_back(d.expr, unituc(*d.ring));
            if (text.rfind("TrivExt", 0) == 0 && text.back() == ')' && text[text.size() - 2] == '1') t1 = d.ring;
            if (text.rfind("PolyQuot", 0) == 0) p2 = d.ring;
        }
        auto r = agree(cr.id() + " T(R,M)", v, "trivial extension equivalence broken");
        r.note = notes;
        if (r.passed && t1 && p2 && !verify_isomorphism(RingHom{*t1, *p2, identity_map(t1->order())}))
            r = fail(cr.id() + " T(R,M)", {{"reason", "T(R,R) is not R[x]/<x^2> under (r,m) -> r + mx"}});
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<TheoremCheckResult> prop_sn(const CorpusRing& cr, VerifyContext& ctx) {
    if (!cr.expr) return {};
    std::vector<TheoremCheckResult> out;
    if (cr.expr->kind == ExprKind::Sn)
        out.push_back(agree(cr.id(), {{"R", unituc(ctx.pool.get(cr.expr->rings[0]))}, {"S_n(R)", unituc(cr.ring)}},
                            "S_n(R) verdict differs from R"));
    if (grid_base(cr)) {
        const auto b = canon(cr);
        std::vector<std::pair<std::string, bool>> v{{"R", unituc(cr.ring)}};
        std::string notes;
        for (int n = 1; n <= 4; ++n) {
            auto d = derive(ctx, "Sn(" + std::to_string(n) + "," + b + ")");
            if (d.ring)
                v.emplace_back(d.expr, unituc(*d.ring));
            else
                notes += (notes.empty() ? "" : "; ") + d.expr + ": " + d.note;
        }
        auto r = agree(cr.id() + " S_1..S_4", v, "S_n verdicts disagree");
        r.note = notes;
        const auto s2 = derive(ctx, "Sn(2," + b + ")");
        const auto t = derive(ctx, "TrivExt(" + b + ",1)");
        if (r.passed && s2.ring && t.ring && !verify_isomorphism(RingHom{*s2.ring, *t.ring, identity_map(t.ring->order())}))
            r = fail(cr.id() + " S_1..S_4", {{"reason", "S_2(R) is not T(R,R) under the coordinate identity"}});
        out.push_back(std::move(r));
    }
    return out;
}

inline bool is_family(ExprKind k) {
    return k == ExprKind::Anm || k == ExprKind::Bnm || k == ExprKind::Tnm || k == ExprKind::Snm || k == ExprKind::Un;
}

inline std::vector<TheoremCheckResult> prop_abc(const CorpusRing& cr, VerifyContext& ctx) {
    if (!cr.expr) return {};
    std::vector<TheoremCheckResult> out;
    if (is_family(cr.expr->kind))
        out.push_back(agree(cr.id(), {{"R", unituc(ctx.pool.get(cr.expr->rings[0]))}, {"family", unituc(cr.ring)}},
                            "family verdict differs from R"));
    if (grid_base(cr)) {
        const auto b = canon(cr);
        std::vector<std::pair<std::string, bool>> v{{"R", unituc(cr.ring)}};
        std::string notes;
        std::vector<std::string> texts;
        for (auto nm : {"2,2", "2,3", "3,2"})
            for (auto f : {"Anm", "Bnm", "Tnm", "Snm"}) texts.push_back(std::string(f) + "(" + nm + "," + b + ")");
        for (auto n : {"2", "3", "4"}) texts.push_back(std::string("Un(") + n + "," + b + ")");
        for (const auto& text : texts) {
            auto d = derive(ctx, text);
            if (d.ring)
                v.emplace_back(d.expr, unituc(*d.ring));
            else
                notes += (notes.empty() ? "" : "; ") + d.expr + ": " + d.note;
        }
        auto r = agree(cr.id() + " A/B/C families", v, "family verdicts disagree");
        r.note = notes;
        out.push_back(std::move(r));
    }
    return out;
}

/// A_{n,m}(R) -> T_{n,m}(R): coefficients of x^k fill the first Toeplitz block, those of y^k the second.
inline std::vector<Elem> phi_map(const FiniteRing& base, std::uint32_t n, std::uint32_t m, const FiniteRing& A) {
    const CoordinateCodec codec(std::vector<std::uint32_t>(n + m - 1, base.order()));
    const auto P = tnm_pattern(n, m);
    const std::uint32_t N = n + m;
    std::vector<Elem> map(A.order(), A.order());
    for (Elem idx = 0; idx < A.order(); ++idx) {
        const auto c = codec.decode(idx);  // 1, x..x^{n-1}, y..y^{m-1}
        auto xc = [&](std::uint32_t k) { return k == 0 ? c[0] : c[k]; };
        auto yc = [&](std::uint32_t k) { return k == 0 ? c[0] : c[n - 1 + k]; };
        std::vector<Elem> mat(std::size_t(N) * N, base.zero());
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i; j < n; ++j) mat[std::size_t(i) * N + j] = xc(j - i);
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = i; j < m; ++j) mat[std::size_t(n + i) * N + n + j] = yc(j - i);
        if (auto t = pattern_index(base, P, mat)) map[idx] = *t;
    }
    return map;
}

/// B_{n,m}(R) -> S_{n,m}(R), with a_{ij} the coefficient of y^i x^j.
inline std::vector<Elem> psi_map(const FiniteRing& base, std::uint32_t n, std::uint32_t m, const FiniteRing& B) {
    const CoordinateCodec codec(std::vector<std::uint32_t>(n * m, base.order()));
    const auto P = snm_pattern(n, m);
    const std::uint32_t N = n + m - 1;
    std::vector<Elem> map(B.order(), B.order());
    for (Elem idx = 0; idx < B.order(); ++idx) {
        const auto c = codec.decode(idx);
        auto a = [&](std::uint32_t i, std::uint32_t j) { return c[std::size_t(i) * n + j]; };
        std::vector<Elem> mat(std::size_t(N) * N, base.zero());
        for (std::uint32_t r = 0; r < N; ++r)
            for (std::uint32_t col = r; col < N; ++col) {
                Elem v;
                if (r < m && col < m)
                    v = a(col - r, 0);
                else if (r + 1 < m)
                    v = a(m - 1 - r, col - m + 1);
                else
                    v = a(0, col - r);
                mat[std::size_t(r) * N + col] = v;
            }
        if (auto s = pattern_index(base, P, mat)) map[idx] = *s;
    }
    return map;
}

/// Matrix pattern read off a display: entry k > 0 is the free coordinate a_k
/// (k = 1 is the diagonal), 0 is a structural zero.
inline MatrixPattern display_pattern(std::uint32_t N, const std::vector<int>& cells) {
    MatrixPattern P{N, 0, std::vector<int>(cells.size(), -1)};
    int top = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        P.cell[i] = cells[i] - 1;
        top = std::max(top, cells[i]);
    }
    P.coords = static_cast<std::uint32_t>(top);
    return P;
}

/// Checks that the matrices of pattern_ring(base, mine) are exactly those of
/// the displayed shape and that the induced map is an isomorphism.
inline std::optional<std::string> shape_matches(const FiniteRing& base, const MatrixPattern& mine,
                                                const MatrixPattern& display, const std::string& what) {
    const auto R = pattern_ring(what + " (constructed)", base, mine);
    const auto D = pattern_ring(what + " (display)", base, display);
    if (R.order() != D.order()) return what + ": orders differ";
    std::vector<Elem> map(R.order());
    for (Elem a = 0; a < R.order(); ++a) {
        auto t = pattern_index(base, display, pattern_matrix(base, mine, a));
        if (!t) return what + ": element " + std::to_string(a) + " does not fit the display";
        map[a] = *t;
    }
    if (!verify_isomorphism(RingHom{R, D, map})) return what + ": not an isomorphism";
    return std::nullopt;
}

/// U_4 is generated by X (c_1 shift) and Y (b_1 shift) with X^2 = Y^2 = XYX = 0,
/// and 1, X, Y, XY, YX, YXY are an R-basis.
inline std::optional<std::string> c4_presentation(const FiniteRing& base, const FiniteRing& U4) {
    const auto P = un_pattern(4);
    auto unit_matrix = [&](std::initializer_list<std::pair<int, int>> cells) {
        std::vector<Elem> m(16, base.zero());
        for (auto [i, j] : cells) m[std::size_t(i) * 4 + j] = base.one();
        return *pattern_index(base, P, m);
    };
    const Elem X = unit_matrix({{1, 2}});
    const Elem Y = unit_matrix({{0, 1}, {2, 3}});
    auto mul = [&](Elem a, Elem b) { return U4.mul(a, b); };
    if (mul(X, X) != U4.zero() || mul(Y, Y) != U4.zero() || mul(mul(X, Y), X) != U4.zero())
        return std::string("U_4 generators violate x^2 = y^2 = xyx = 0");
    const std::vector<Elem> basis{U4.one(), X, Y, mul(X, Y), mul(Y, X), mul(mul(Y, X), Y)};
    // R-span of the six words: closure of the additive subgroup generated by r * w.
    std::vector<bool> seen(U4.order(), false);
    std::vector<Elem> span{U4.zero()};
    seen[U4.zero()] = true;
    const auto scalars = [&] {
        std::vector<Elem> s;
        for (Elem r = 0; r < base.order(); ++r) {
            std::vector<Elem> m(16, base.zero());
            for (int i = 0; i < 4; ++i) m[std::size_t(i) * 5] = r;
            s.push_back(*pattern_index(base, P, m));
        }
        return s;
    }();
    for (Elem w : basis) {
        std::vector<Elem> next;
        for (Elem x : span)
            for (Elem r : scalars) {
                const Elem y = U4.add(x, mul(r, w));
                if (!seen[y]) {
                    seen[y] = true;
                    next.push_back(y);
                }
            }
        span.insert(span.end(), next.begin(), next.end());
    }
    if (span.size() != U4.order()) return std::string("words 1, x, y, xy, yx, yxy do not span U_4");
    return std::nullopt;
}

inline std::vector<TheoremCheckResult> lem_iso3(const CorpusRing& cr, VerifyContext& ctx) {
    if (!cr.expr || cr.expr->kind != ExprKind::Z || (cr.expr->ints[0] != 2 && cr.expr->ints[0] != 4)) return {};
    std::vector<TheoremCheckResult> out;
    const auto b = canon(cr);
    const auto& R = cr.ring;
    for (auto [n, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}}) {
        const auto nm = std::to_string(n) + "," + std::to_string(m);
        const auto A = ctx.pool.get("Anm(" + nm + "," + b + ")");
        const auto T = ctx.pool.get("Tnm(" + nm + "," + b + ")");
        const bool phi = verify_isomorphism(RingHom{A, T, phi_map(R, n, m, A)});
        const auto B = ctx.pool.get("Bnm(" + nm + "," + b + ")");
        const auto S = ctx.pool.get("Snm(" + nm + "," + b + ")");
        const bool psi = verify_isomorphism(RingHom{B, S, psi_map(R, n, m, B)});
        const std::string id = "(" + nm + ")," + b;
        if (!phi) out.push_back(fail("A" + id, {{"reason", "phi is not an isomorphism"}}));
        else out.push_back(pass("A" + id, {{"phi", "isomorphism"}}));
        if (!psi) out.push_back(fail("B" + id, {{"reason", "psi is not an isomorphism"}}));
        else out.push_back(pass("B" + id, {{"psi", "isomorphism"}}));
    }
    if (R.order() == 2) {
        // Displays: 4x4 block Toeplitz, 3x3 constant diagonal, and the U_4 shape.
        const auto ex1 = display_pattern(4, {1, 2, 0, 0, 0, 1, 0, 0, 0, 0, 1, 3, 0, 0, 0, 1});
        const auto ex2 = display_pattern(3, {1, 2, 3, 0, 1, 4, 0, 0, 1});
        const auto ex3 = display_pattern(4, {1, 2, 3, 4, 0, 1, 5, 6, 0, 0, 1, 2, 0, 0, 0, 1});
        std::optional<std::string> err = shape_matches(R, tnm_pattern(2, 2), ex1, "A_{2,2} display");
        if (!err) err = shape_matches(R, snm_pattern(2, 2), ex2, "B_{2,2} display");
        if (!err) err = shape_matches(R, un_pattern(4), ex3, "U_4 display");
        if (!err) err = c4_presentation(R, ctx.pool.get("Un(4," + b + ")"));
        out.push_back(err ? fail("Un(4," + b + ") shape", {{"reason", *err}}) : pass("Un(4," + b + ") shape"));
    }
    return out;
}

}  // namespace detail::verify

inline const std::vector<std::pair<std::string, std::string>>& product_samples() {
    static const std::vector<std::pair<std::string, std::string>> s = {
        {"Z2", "Z4"}, {"Z3", "Z4"}, {"Z2", "GF4"}, {"Z4", "T2Z2"}, {"Z2", "M2Z2"}, {"Z8", "Z3"},
    };
    return s;
}

/// The theorem registry, in report order.
inline std::vector<Theorem> theorem_registry(const std::vector<CorpusEntry>& corpus) {
    namespace v = detail::verify;
    std::map<std::string, std::string> exprs;
    for (const auto& e : corpus)
        if (!e.fixture) exprs[e.id] = e.expr;
    return {
        {"LEM-PROD", "a direct product is unituc iff every factor is",
         [exprs](const CorpusRing& cr, VerifyContext& ctx) { return v::lem_prod(cr, ctx, product_samples(), exprs); }},
        {"LEM-CONJ", "e - f = u a unit gives u^-1 (1 - e) u = f", v::lem_conj},
        {"EX-ELT", "idempotents and central nilpotents are unit-uniquely clean", v::ex_elt},
        {"LEM-ERE", "e + er(1-e) and e + (1-e)re are idempotents conjugate to e", v::lem_ere},
        {"COR-ABEL", "abelian unituc iff uniquely clean", v::cor_abel},
        {"PROP-IMP", "no unit sums to nonzero idempotents; unituc passes to R/I for I in J", v::prop_imp},
        {"EX-MAT", "M_2(S) is not unituc", v::ex_mat},
        {"LEM-2J", "unituc implies 2 in J(R)", v::lem_2j},
        {"LEM-EPI", "epimorphisms with kernel in J preserve and reflect unituc", v::lem_epi},
        {"PROP-TRI", "R, T_n(R) for all n, T_n(R) for some n: unituc together", v::prop_tri},
        {"THM-BOOL", "unituc implies R/J(R) Boolean", v::thm_bool},
        {"COR-NIL", "unituc, strongly nil-clean, strongly uniquely clean, strongly J-clean agree", v::cor_nil},
        {"THM-DIV", "division, semisimple and local cases", v::thm_div},
        {"THM-GRP", "group rings over 2-groups", v::thm_grp},
        {"THM-CHAR", "unituc iff exchange with R/J(R) Boolean", v::thm_char},
        {"LEM-CORNER", "corners of unituc rings are unituc", v::lem_corner},
        {"PROP-DF", "unituc rings are Dedekind finite", v::prop_df},
        {"THM-MOR-PEIRCE", "Peirce criterion: corners unituc and off-diagonal parts in J", v::thm_mor_peirce},
        {"COR-KS", "K_s(R) unituc iff R unituc and s in J(R)", v::cor_ks},
        {"THM-MNS", "M_n(R;s) unituc iff R unituc and s in J(R); M_2(R;s) = K_{s^2}(R)", v::thm_mns},
        {"PROP-TEXT", "trivial extensions and R[x]/<x^2>", v::prop_text},
        {"PROP-SN", "S_n(R) unituc iff R unituc", v::prop_sn},
        {"PROP-ABC", "A_{n,m}, B_{n,m}, C_n families track R", v::prop_abc},
        {"LEM-ISO3", "A = T_{n,m}, B = S_{n,m}, C_n = U_n and the small displays", v::lem_iso3},
    };
}

inline std::vector<std::string> theorem_ids() {
    std::vector<std::string> ids;
    for (const auto& t : theorem_registry({})) ids.push_back(t.id);
    return ids;
}

inline std::vector<CorpusEntry> default_corpus() {
    using P = Property;
    struct Row {
        const char* id;
        const char* expr;
        bool unituc;
        const char* why;
    };
    static const Row rows[] = {
        {"Z2", "Z(2)", true, "Boolean rings are unituc"},
        {"Z3", "Z(3)", false, "the only unituc division ring is F2"},
        {"Z4", "Z(4)", true, "local with residue field F2"},
        {"Z8", "Z(8)", true, "local with residue field F2"},
        {"GF3", "GF(3,1)", false, "the only unituc division ring is F2"},
        {"GF4", "GF(2,2)", false, "the only unituc division ring is F2"},
        {"Z2xZ2", "Prod(Z(2),Z(2))", true, "products of unituc rings"},
        {"Z2xZ3", "Prod(Z(2),Z(3))", false, "products need unituc factors"},
        {"M2Z2", "M(2,Z(2))", false, "proper matrix rings are never unituc"},
        {"M2Z4", "M(2,Z(4))", false, "proper matrix rings are never unituc"},
        {"T2Z2", "T(2,Z(2))", true, "triangular rings over unituc rings"},
        {"T3Z2", "T(3,Z(2))", true, "triangular rings over unituc rings"},
        {"T2Z4", "T(2,Z(4))", true, "triangular rings over unituc rings"},
        {"T3Z4", "T(3,Z(4))", true, "triangular rings over unituc rings"},
        {"T2Z3", "T(2,Z(3))", false, "triangular rings over a non-unituc ring"},
        {"S3Z2", "Sn(3,Z(2))", true, "S_n(R) tracks R"},
        {"K2Z4", "Ks(Z(4),2)", true, "K_s(R) with s in J(R)"},
        {"K1Z4", "Ks(Z(4),1)", false, "K_s(R) with s a unit"},
        {"M2Z4s2", "MnS(2,Z(4),2)", true, "M_n(R;s) with s in J(R)"},
        {"TZ4Z4", "TrivExt(Z(4),1)", true, "trivial extensions track R"},
        {"F2C2", "GR(Z(2),C(2))", true, "group ring of a 2-group over a unituc ring"},
        {"F2C4", "GR(Z(2),C(4))", true, "group ring of a 2-group over a unituc ring"},
        {"Z4C2", "GR(Z(4),C(2))", true, "group ring of a 2-group over a unituc ring"},
        {"F2C2C2", "GR(Z(2),GxG(C(2),C(2)))", true, "group ring of a 2-group over a unituc ring"},
        {"F2C3", "GR(Z(2),C(3))", false, "group rings of unituc rings need a 2-group"},
        {"F4C2", "GR(GF(2,2),C(2))", false, "group rings need a unituc coefficient ring"},
        {"Z2x3", "PolyQuot(Z(2),3)", true, "truncated polynomial rings over unituc rings"},
        {"F4skew", "SkewPolyQuot(GF(2,2),2,frobenius)", false, "truncated skew polynomials track R"},
        {"Z2xZ2skew", "SkewPolyQuot(Prod(Z(2),Z(2)),2,explicit([0,2,1,3]))", true,
         "truncated skew polynomials track R"},
        {"A22Z2", "Anm(2,2,Z(2))", true, "A_{n,m}(R) tracks R"},
        {"A23Z4", "Anm(2,3,Z(4))", true, "A_{n,m}(R) tracks R"},
        {"A22Z3", "Anm(2,2,Z(3))", false, "A_{n,m}(R) tracks R"},
        {"B22Z2", "Bnm(2,2,Z(2))", true, "B_{n,m}(R) tracks R"},
        {"B32Z2", "Bnm(3,2,Z(2))", true, "B_{n,m}(R) tracks R"},
        {"B22Z3", "Bnm(2,2,Z(3))", false, "B_{n,m}(R) tracks R"},
        {"T23Z2", "Tnm(2,3,Z(2))", true, "T_{n,m}(R) tracks R"},
        {"T22Z4", "Tnm(2,2,Z(4))", true, "T_{n,m}(R) tracks R"},
        {"S22Z2", "Snm(2,2,Z(2))", true, "S_{n,m}(R) tracks R"},
        {"S23Z2", "Snm(2,3,Z(2))", true, "S_{n,m}(R) tracks R"},
        {"U4Z2", "Un(4,Z(2))", true, "C_n(R) = U_n(R) tracks R"},
        {"U3Z4", "Un(3,Z(4))", true, "C_n(R) = U_n(R) tracks R"},
        {"CornerM2Z2", "Corner(M(2,Z(2)),8)", true, "E11 M_2(F2) E11 is F2"},
        {"Z8modZ4", "Quot(Z(8),[4])", true, "Z/8 modulo 4Z/8 is Z/4"},
    };
    std::vector<CorpusEntry> out;
    for (const auto& r : rows) {
        CorpusEntry e{r.id, r.expr, {{P::unituc, r.unituc}}, {{P::unituc, r.why}}, std::nullopt};
        out.push_back(std::move(e));
    }
    auto find = [&](const char* id) -> CorpusEntry& {
        for (auto& e : out)
            if (e.id == id) return e;
        throw std::logic_error(id);
    };
    auto expect = [&](const char* id, P p, bool v, const char* why) {
        find(id).expected[p] = v;
        find(id).provenance[p] = why;
    };
    expect("Z2", P::boolean, true, "x^2 = x mod 2");
    expect("Z2xZ2", P::boolean, true, "componentwise x^2 = x");
    expect("Z4", P::local, true, "non-units {0,2} = J");
    expect("Z4", P::uniquely_clean, true, "clean decomposition scan");
    expect("Z8", P::local, true, "non-units are the even residues");
    expect("M2Z2", P::abelian, false, "E11 does not commute with E12");
    expect("M2Z2", P::dedekind_finite, true, "finite rings are Dedekind finite");
    expect("T2Z2", P::abelian, false, "E11 does not commute with E12");
    expect("GF4", P::reduced, true, "fields have no nilpotents");
    return out;
}

/// Expected properties of every entry, with replayable witnesses on expected failures.
inline std::vector<TheoremCheckResult> check_expectations(const CorpusRing& cr) {
    std::vector<TheoremCheckResult> out;
    for (const auto& [p, want] : cr.entry->expected) {
        const auto& v = has_property(cr.ring, p);
        const std::string id = cr.id() + ":" + std::string(property_name(p));
        if (v.holds != want) {
            out.push_back(detail::verify::fail(id, {{"reason", "classification differs from expectation"},
                                                    {"expected", want}, {"verdict", to_json(v)}}));
        } else if (!v.holds && (!v.witness || !replay_witness(cr.ring, p, *v.witness))) {
            out.push_back(detail::verify::fail(id, {{"reason", "failure witness does not replay"}, {"verdict", to_json(v)}}));
        } else {
            out.push_back(detail::verify::pass(id));
        }
    }
    return out;
}

inline const char* kExpectationsId = "CORPUS-EXPECT";

struct SuiteReport {
    /// Per theorem, in registry order; results ordered by corpus position. Empty for an empty corpus.
    std::vector<std::pair<std::string, std::vector<TheoremCheckResult>>> suite;
    std::size_t failures = 0;
    double total_ms = 0;
};

/// Resolves every corpus entry, building rings concurrently through the pool.
inline std::vector<CorpusRing> resolve_corpus(const std::vector<CorpusEntry>& corpus, RingPool& pool, unsigned jobs) {
    std::vector<std::optional<CorpusRing>> slots(corpus.size());
    std::vector<std::exception_ptr> errors(corpus.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < corpus.size();) {
            try {
                const auto& e = corpus[i];
                if (e.fixture) {
                    slots[i] = CorpusRing{&e, *e.fixture, std::nullopt};
                } else {
                    auto ex = parse_expr(e.expr);
                    slots[i] = CorpusRing{&e, pool.get(ex), ex};
                }
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < std::max(1u, jobs); ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    std::vector<CorpusRing> out;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

/// Runs the selected theorems (empty = all) over the corpus with `jobs` workers.
inline SuiteReport run_suite(const std::vector<CorpusEntry>& corpus, const std::vector<std::string>& selected,
                             unsigned jobs, bool with_expectations = true) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    auto registry = theorem_registry(corpus);
    for (const auto& id : selected)
        if (std::none_of(registry.begin(), registry.end(), [&](const Theorem& t) { return t.id == id; }))
            throw std::invalid_argument("unknown theorem id '" + id + "'");
    if (!selected.empty())
        std::erase_if(registry, [&](const Theorem& t) {
            return std::find(selected.begin(), selected.end(), t.id) == selected.end();
        });

    RingPool pool;
    const auto rings = resolve_corpus(corpus, pool, jobs);
    VerifyContext ctx{pool, {}};
    for (const auto& cr : rings)
        if (cr.expr) ctx.corpus_exprs.insert(render(*cr.expr));

    const std::size_t columns = registry.size() + (with_expectations ? 1 : 0);
    std::vector<std::vector<TheoremCheckResult>> cells(columns * rings.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < cells.size();) {
            const std::size_t t = k / std::max<std::size_t>(rings.size(), 1), r = k % rings.size();
            const auto t0 = clock::now();
            const bool is_expect = t == registry.size();
            const std::string tid = is_expect ? kExpectationsId : registry[t].id;
            std::vector<TheoremCheckResult> res;
            try {
                res = is_expect ? check_expectations(rings[r]) : registry[t].check(rings[r], ctx);
            } catch (const std::exception& e) {
                res = {detail::verify::fail(rings[r].id(), {{"reason", "exception"}, {"error", e.what()}})};
            }
            const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
            for (auto& x : res) {
                x.theorem_id = tid;
                x.corpus_ring = rings[r].id();
                x.ms = ms / static_cast<double>(res.size());
            }
            cells[k] = std::move(res);
        }
    };
    if (!rings.empty()) {
        std::vector<std::thread> threads;
        for (unsigned i = 1; i < std::max(1u, jobs); ++i) threads.emplace_back(worker);
        worker();
        for (auto& th : threads) th.join();
    }

    SuiteReport report;
    for (std::size_t t = 0; t < columns && !rings.empty(); ++t) {
        const bool is_expect = t == registry.size();
        std::vector<TheoremCheckResult> all;
        for (std::size_t r = 0; r < rings.size(); ++r)
            for (auto& x : cells[t * rings.size() + r]) {
                report.failures += !x.passed;
                all.push_back(std::move(x));
            }
        report.suite.emplace_back(is_expect ? kExpectationsId : registry[t].id, std::move(all));
    }
    report.total_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    return report;
}

inline SuiteReport run_all(const std::vector<CorpusEntry>& corpus, unsigned jobs) { return run_suite(corpus, {}, jobs); }

inline std::vector<TheoremCheckResult> run_theorem(const std::string& id, const std::vector<CorpusEntry>& corpus,
                                                   unsigned jobs = 1) {
    auto report = run_suite(corpus, {id}, jobs, false);
    if (report.suite.empty()) return {};
    return std::move(report.suite.front().second);
}

inline nlohmann::json to_json(const TheoremCheckResult& r, bool with_timing = true) {
    nlohmann::json j = {{"ring", r.ring_id}, {"passed", r.passed},
                        {"witness", r.witness ? *r.witness : nlohmann::json(nullptr)}};
    if (with_timing) j["ms"] = static_cast<std::int64_t>(r.ms + 0.5);
    if (!r.corpus_ring.empty() && r.corpus_ring != r.ring_id) j["corpus"] = r.corpus_ring;
    if (r.skipped) j["skipped"] = true;
    if (!r.note.empty()) j["note"] = r.note;
    if (!r.evidence.is_null()) j["evidence"] = r.evidence;
    return j;
}

inline nlohmann::json to_json(const SuiteReport& rep, bool with_timing = true) {
    nlohmann::json suite = nlohmann::json::array();
    for (const auto& [id, results] : rep.suite) {
        nlohmann::json rs = nlohmann::json::array();
        for (const auto& r : results) rs.push_back(to_json(r, with_timing));
        suite.push_back({{"theorem", id}, {"results", rs}});
    }
    return {{"suite", suite}, {"failures", rep.failures}};
}

/// Corpus file: [{"id":..,"expr":..,"expected":{"unituc":true},"provenance":{"unituc":".."}}, ...]
inline std::vector<CorpusEntry> corpus_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("corpus file must hold a JSON array");
    std::vector<CorpusEntry> out;
    for (const auto& item : j) {
        CorpusEntry e;
        e.id = item.at("id").get<std::string>();
        e.expr = item.at("expr").get<std::string>();
        if (item.contains("expected"))
            for (const auto& [k, v] : item["expected"].items()) {
                auto p = parse_property(k);
                if (!p) throw std::invalid_argument("unknown property '" + k + "' in corpus entry " + e.id);
                e.expected[*p] = v.get<bool>();
                if (item.contains("provenance") && item["provenance"].contains(k))
                    e.provenance[*p] = item["provenance"][k].get<std::string>();
            }
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open corpus file " + path);
    return corpus_from_json(nlohmann::json::parse(in));
}

}  // namespace finring
