#pragma once

/**
 * @file ring.hpp
 * @brief Tabulated finite unital rings.
 *
 * A FiniteRing is an immutable carrier {0, ..., order-1} together with its
 * addition and multiplication tables. Every constructor in this library
 * produces one of these; all structural computations read the tables only.
 *
 * Copies are cheap: the tables live behind a shared pointer, and so do the
 * lazily computed structure caches (see structure.hpp), which are populated
 * once under std::call_once and are read-only afterwards.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <memory>
#include <mutex>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "finring/error.hpp"

namespace finring {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kDefaultMaxOrder = 65536;
inline constexpr std::uint32_t kExhaustiveAxiomLimit = 512;
inline constexpr std::uint32_t kAxiomSamples = 10000;
inline constexpr std::uint64_t kAxiomSeed = 0xF1E1D;

/// Order cap for materialized tables; FINRING_MAX_ORDER overrides the default.
inline std::uint64_t max_order() {
    if (const char* env = std::getenv("FINRING_MAX_ORDER")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v >= 2) return v;
    }
    return kDefaultMaxOrder;
}

/// base^exp, saturating at UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

inline void require_order(std::uint64_t order, const std::string& what) {
    const auto cap = max_order();
    if (order > cap) throw CapExceeded(what, order, cap);
}

struct StructureCache;
struct Taxonomy;

namespace detail {

struct Caches {
    std::once_flag structure_once;
    std::shared_ptr<const StructureCache> structure;
    std::once_flag taxonomy_once;
    std::shared_ptr<const Taxonomy> taxonomy;
};

struct RingData {
    std::uint32_t order = 0;
    Elem zero = 0;
    Elem one = 0;
    std::vector<Elem> add;
    std::vector<Elem> mul;
    std::vector<Elem> neg;
    std::string label;
    std::vector<std::string> render;
    Caches caches;
};

}  // namespace detail

class FiniteRing {
public:
    /// Wraps raw tables without validating them. The additive inverse table
    /// is derived here; elements lacking an inverse get the sentinel `order`.
    static FiniteRing from_tables(std::string label, std::uint32_t order, std::vector<Elem> add,
                                  std::vector<Elem> mul, Elem zero, Elem one,
                                  std::vector<std::string> render = {}) {
        if (order == 0) throw ConstructionError("ring order must be positive");
        const std::size_t n = order;
        if (add.size() != n * n || mul.size() != n * n)
            throw ConstructionError("operation tables must be order x order");
        for (Elem v : add)
            if (v >= order) throw ConstructionError("addition table entry out of range");
        for (Elem v : mul)
            if (v >= order) throw ConstructionError("multiplication table entry out of range");
        if (zero >= order || one >= order) throw ConstructionError("zero/one out of range");
        if (!render.empty() && render.size() != n)
            throw ConstructionError("render list must have one entry per element");

        auto data = std::make_shared<detail::RingData>();
        data->order = order;
        data->zero = zero;
        data->one = one;
        data->add = std::move(add);
        data->mul = std::move(mul);
        data->label = std::move(label);
        data->neg.assign(n, order);
        for (std::size_t a = 0; a < n; ++a) {
            const Elem* row = data->add.data() + a * n;
            for (std::size_t b = 0; b < n; ++b) {
                if (row[b] == zero) {
                    data->neg[a] = static_cast<Elem>(b);
                    break;
                }
            }
        }
        if (render.empty()) {
            render.reserve(n);
            for (std::size_t i = 0; i < n; ++i) render.push_back(std::to_string(i));
        }
        data->render = std::move(render);
        return FiniteRing(std::move(data));
    }

    std::uint32_t order() const noexcept { return d_->order; }
    Elem zero() const noexcept { return d_->zero; }
    Elem one() const noexcept { return d_->one; }
    const std::string& label() const noexcept { return d_->label; }

    // Unchecked hot-path arithmetic; indices must be valid.
    Elem add(Elem a, Elem b) const noexcept { return d_->add[std::size_t(a) * d_->order + b]; }
    Elem mul(Elem a, Elem b) const noexcept { return d_->mul[std::size_t(a) * d_->order + b]; }
    Elem neg(Elem a) const noexcept { return d_->neg[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    Elem pow(Elem a, std::uint64_t k) const noexcept {
        Elem result = d_->one;
        Elem base = a;
        while (k > 0) {
            if (k & 1) result = mul(result, base);
            base = mul(base, base);
            k >>= 1;
        }
        return result;
    }

    /// n * 1 computed by repeated addition (n >= 0).
    Elem integer(std::uint64_t n) const noexcept {
        Elem r = d_->zero;
        for (std::uint64_t i = 0; i < n; ++i) r = add(r, d_->one);
        return r;
    }

    std::span<const Elem> add_table() const noexcept { return d_->add; }
    std::span<const Elem> mul_table() const noexcept { return d_->mul; }
    std::span<const Elem> neg_table() const noexcept { return d_->neg; }

    const std::string& render(Elem a) const { return d_->render.at(a); }
    const std::vector<std::string>& renders() const noexcept { return d_->render; }

    bool valid(Elem a) const noexcept { return a < d_->order; }

    /// True when both handles share the same tables.
    bool same_as(const FiniteRing& other) const noexcept { return d_ == other.d_; }

    /// Table equality (labels and renders ignored).
    bool tables_equal(const FiniteRing& other) const noexcept {
        return d_->order == other.d_->order && d_->zero == other.d_->zero &&
               d_->one == other.d_->one && d_->add == other.d_->add && d_->mul == other.d_->mul;
    }

    detail::Caches& caches() const noexcept { return d_->caches; }

private:
    explicit FiniteRing(std::shared_ptr<detail::RingData> d) : d_(std::move(d)) {}
    std::shared_ptr<detail::RingData> d_;
};

// Checked element arithmetic.

inline void check_index(const FiniteRing& R, Elem a) {
    if (!R.valid(a))
        throw std::out_of_range("element index " + std::to_string(a) + " out of range for ring of order " +
                                std::to_string(R.order()));
}

inline Elem ring_add(const FiniteRing& R, Elem a, Elem b) {
    check_index(R, a);
    check_index(R, b);
    return R.add(a, b);
}
inline Elem ring_mul(const FiniteRing& R, Elem a, Elem b) {
    check_index(R, a);
    check_index(R, b);
    return R.mul(a, b);
}
inline Elem ring_neg(const FiniteRing& R, Elem a) {
    check_index(R, a);
    return R.neg(a);
}
inline Elem ring_pow(const FiniteRing& R, Elem a, std::uint64_t k) {
    check_index(R, a);
    return R.pow(a, k);
}

/// A duplicate-free set of element indices of one ring, kept ascending.
class ElementSubset {
public:
    ElementSubset() = default;

    ElementSubset(std::uint32_t ring_order, std::vector<Elem> members) : mask_(ring_order, false) {
        for (Elem m : members) {
            if (m >= ring_order) throw std::out_of_range("subset member out of range");
            mask_[m] = true;
        }
        members_.reserve(members.size());
        for (std::uint32_t i = 0; i < ring_order; ++i)
            if (mask_[i]) members_.push_back(i);
    }

    static ElementSubset from_mask(std::vector<bool> mask) {
        ElementSubset s;
        for (std::uint32_t i = 0; i < mask.size(); ++i)
            if (mask[i]) s.members_.push_back(i);
        s.mask_ = std::move(mask);
        return s;
    }

    bool contains(Elem a) const noexcept { return a < mask_.size() && mask_[a]; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const std::vector<Elem>& members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    std::uint32_t ring_order() const noexcept { return static_cast<std::uint32_t>(mask_.size()); }

    bool subset_of(const ElementSubset& other) const noexcept {
        return std::all_of(members_.begin(), members_.end(), [&](Elem m) { return other.contains(m); });
    }

    friend bool operator==(const ElementSubset& a, const ElementSubset& b) {
        return a.members_ == b.members_;
    }

private:
    std::vector<Elem> members_;
    std::vector<bool> mask_;
};

// Axiom validation.

struct AxiomViolation {
    std::string axiom;
    std::array<Elem, 3> witness{};
};

struct ValidationReport {
    bool sampled = false;
    std::vector<AxiomViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

namespace detail {

class ViolationLog {
public:
    void record(std::string axiom, Elem a, Elem b = 0, Elem c = 0) {
        for (const auto& v : out_)
            if (v.axiom == axiom) return;
        out_.push_back({std::move(axiom), {a, b, c}});
    }
    bool has(const std::string& axiom) const {
        return std::any_of(out_.begin(), out_.end(), [&](const auto& v) { return v.axiom == axiom; });
    }
    std::vector<AxiomViolation> take() { return std::move(out_); }

private:
    std::vector<AxiomViolation> out_;
};

inline void check_triple(const FiniteRing& R, Elem a, Elem b, Elem c, ViolationLog& log) {
    if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c))) log.record("additive associativity", a, b, c);
    if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c))) log.record("multiplicative associativity", a, b, c);
    if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c))) log.record("left distributivity", a, b, c);
    if (R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c))) log.record("right distributivity", a, b, c);
}

}  // namespace detail

/// Checks every ring axiom on the tables. Orders up to 512 are scanned
/// exhaustively; above that the triple axioms are checked on 10,000 seeded
/// random triples and the report is flagged as sampled.
inline ValidationReport validate_ring_axioms(const FiniteRing& R) {
    ValidationReport report;
    detail::ViolationLog log;
    const std::uint32_t n = R.order();
    const Elem z = R.zero();
    const Elem o = R.one();

    if (o == z) log.record("one != zero", o, z);

    for (Elem a = 0; a < n; ++a) {
        if (R.add(a, z) != a || R.add(z, a) != a) log.record("additive identity", a);
        if (R.neg(a) >= n) {
            log.record("additive inverse", a);
        } else if (R.add(R.neg(a), a) != z) {
            log.record("additive inverse", a, R.neg(a));
        }
        if (R.mul(a, o) != a || R.mul(o, a) != a) log.record("multiplicative identity", a);
        if (R.mul(a, z) != z || R.mul(z, a) != z) log.record("zero annihilates", a);
        for (Elem b = 0; b < n; ++b)
            if (R.add(a, b) != R.add(b, a)) log.record("additive commutativity", a, b);
    }

    if (n <= kExhaustiveAxiomLimit) {
        const auto add = R.add_table();
        const auto mul = R.mul_table();
        for (Elem a = 0; a < n; ++a) {
            const Elem* add_a = add.data() + std::size_t(a) * n;
            const Elem* mul_a = mul.data() + std::size_t(a) * n;
            for (Elem b = 0; b < n; ++b) {
                const Elem ab = mul_a[b];
                const Elem apb = add_a[b];
                const Elem* add_ab_row = add.data() + std::size_t(add_a[b]) * n;
                const Elem* mul_ab_row = mul.data() + std::size_t(ab) * n;
                const Elem* mul_apb_row = mul.data() + std::size_t(apb) * n;
                const Elem* add_b = add.data() + std::size_t(b) * n;
                const Elem* mul_b = mul.data() + std::size_t(b) * n;
                bool bad = false;
                for (Elem c = 0; c < n; ++c) {
                    bad |= add_ab_row[c] != add_a[add_b[c]];
                    bad |= mul_ab_row[c] != mul_a[mul_b[c]];
                    bad |= mul_a[add_b[c]] != add[std::size_t(ab) * n + mul_a[c]];
                    bad |= mul_apb_row[c] != add[std::size_t(mul_a[c]) * n + mul_b[c]];
                }
                if (bad)
                    for (Elem c = 0; c < n; ++c) detail::check_triple(R, a, b, c, log);
            }
        }
    } else {
        report.sampled = true;
        std::mt19937_64 rng(kAxiomSeed);
        std::uniform_int_distribution<Elem> pick(0, n - 1);
        for (std::uint32_t i = 0; i < kAxiomSamples; ++i) {
            const Elem a = pick(rng), b = pick(rng), c = pick(rng);
            detail::check_triple(R, a, b, c, log);
        }
    }
    report.violations = log.take();
    return report;
}

inline std::string describe(const ValidationReport& report) {
    if (report.ok()) return report.sampled ? "ok (sampled)" : "ok";
    std::string s;
    for (const auto& v : report.violations) {
        if (!s.empty()) s += "; ";
        s += v.axiom + " at (" + std::to_string(v.witness[0]) + "," + std::to_string(v.witness[1]) + "," +
             std::to_string(v.witness[2]) + ")";
    }
    return s;
}

/// Validates and returns the ring, or throws ConstructionError.
inline FiniteRing checked(FiniteRing R) {
    const auto report = validate_ring_axioms(R);
    if (!report.ok()) throw ConstructionError(R.label() + " violates ring axioms: " + describe(report));
    return R;
}

}  // namespace finring
