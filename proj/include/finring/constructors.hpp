#pragma once

/**
 * @file constructors.hpp
 * @brief Ring families: base rings, products, matrix-type rings, group rings,
 * truncated (skew) polynomial rings, trivial extensions, corners and quotients.
 *
 * Every constructor returns a validated FiniteRing whose label is the
 * construction expression (see dsl.hpp), so a label can be fed back to the
 * parser. Coordinate orders, which fix element indices:
 *
 *   Z(n)                residue i has index i
 *   GF(p,k)             coefficients c_0..c_{k-1}, index sum c_i p^i (little-endian)
 *   Prod(R_1,..,R_m)    (r_1,..,r_m)
 *   M(n,R)              entries row-major
 *   T(n,R)              cells on/above the diagonal, row-major
 *   Sn(n,R)             diagonal value, then strictly upper cells row-major
 *   Ks(R,s)             (a, x, y, b) for [[a,x],[y,b]]
 *   MnS(n,R,s)          entries row-major
 *   TrivExt(R,k)        (r, m_1..m_k)
 *   GR(R,G)             coefficient of g_0..g_{|G|-1}
 *   PolyQuot/SkewPolyQuot(R,n)   a_0..a_{n-1}
 *   Tnm(n,m,R)          (a, b_1..b_{n-1}, c_1..c_{m-1})
 *   Snm(n,m,R)          (a, b_1..b_{n-1}, d_1..d_{m-1}, c-block row-major)
 *   Un(n,R)             (a, b_1..b_{n-1}, c_1..c_{n-2})
 *   Anm(n,m,R)          (1, x..x^{n-1}, y..y^{m-1})
 *   Bnm(n,m,R)          y^i x^j for i < m, j < n, i major
 *   Corner/Quot         ascending over the parent's indices
 *
 * Everything except GF is big-endian: the first coordinate is the most
 * significant digit of the index.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finring/builder.hpp"
#include "finring/error.hpp"
#include "finring/group.hpp"
#include "finring/hom.hpp"
#include "finring/ideal.hpp"
#include "finring/ring.hpp"
#include "finring/structure.hpp"

namespace finring {

// Base rings.

inline FiniteRing zmod(std::uint32_t n) {
    if (n < 2) throw ConstructionError("Z(n) requires n >= 2");
    const std::string label = "Z(" + std::to_string(n) + ")";
    require_order(n, label);
    std::vector<Elem> add(std::size_t(n) * n), mul(std::size_t(n) * n);
    for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t b = 0; b < n; ++b) {
            add[a * n + b] = static_cast<Elem>((a + b) % n);
            mul[a * n + b] = static_cast<Elem>((a * b) % n);
        }
    return checked(FiniteRing::from_tables(label, n, std::move(add), std::move(mul), 0, 1 % n));
}

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace detail {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients mod p

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Remainder of f modulo monic g over Z_p.
inline Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::uint32_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i)
            f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + std::uint64_t(p - lead) * g[i]) % p);
        trim(f);
    }
    return f;
}

inline bool irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t k = f.size() - 1;
    for (std::size_t d = 1; d <= k / 2; ++d) {
        const std::uint64_t count = saturating_pow(p, d);
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i, c /= p) g[i] = static_cast<std::uint32_t>(c % p);
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

inline std::string render_poly(const std::vector<std::string>& coeff, const char* var, bool skip_zero = true,
                               const std::string& zero = "0", const std::string& one = "1") {
    std::string s;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (skip_zero && coeff[i] == zero) continue;
        std::string mono;
        if (i == 1) mono = var;
        if (i > 1) mono = std::string(var) + "^" + std::to_string(i);
        std::string c = coeff[i];
        if (c.find_first_of("+-") != std::string::npos && !mono.empty()) c = "(" + c + ")";
        if (!s.empty()) s += "+";
        if (mono.empty()) s += c;
        else if (c == one) s += mono;
        else s += c + mono;
    }
    return s.empty() ? zero : s;
}

/// First candidate whose symbols occur in no rendering of R, so that outer
/// variables cannot be confused with the coefficients' own.
inline std::vector<std::string> fresh_symbols(const FiniteRing& R,
                                              std::initializer_list<std::vector<std::string>> candidates) {
    for (const auto& names : candidates) {
        bool clash = false;
        for (Elem a = 0; a < R.order() && !clash; ++a)
            for (const auto& n : names) clash = clash || R.render(a).find(n) != std::string::npos;
        if (!clash) return names;
    }
    return *(candidates.end() - 1);
}

inline std::string paren(const std::string& s) {
    return s.find_first_of("+") != std::string::npos ? "(" + s + ")" : s;
}

}  // namespace detail

/// GF(p^k). For k >= 2 `irr` lists the ascending coefficients of a monic
/// irreducible of degree k; GF(4) and GF(8) default to x^2+x+1 and x^3+x+1.
inline FiniteRing galois_field(std::uint32_t p, std::uint32_t k, std::optional<std::vector<std::uint32_t>> irr = {}) {
    if (!is_prime(p)) throw ConstructionError("GF(p,k): p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw ConstructionError("GF(p,k) requires k >= 1");
    std::string label = "GF(" + std::to_string(p) + "," + std::to_string(k);
    if (irr) {
        label += ",[";
        for (std::size_t i = 0; i < irr->size(); ++i) label += (i ? "," : "") + std::to_string((*irr)[i]);
        label += "]";
    }
    label += ")";
    const std::uint64_t order64 = saturating_pow(p, k);
    require_order(order64, label);
    const auto q = static_cast<std::uint32_t>(order64);

    detail::Poly modulus;
    if (irr) {
        modulus = *irr;
    } else if (k == 1) {
        modulus = {0, 1};
    } else if (p == 2 && k == 2) {
        modulus = {1, 1, 1};
    } else if (p == 2 && k == 3) {
        modulus = {1, 1, 0, 1};
    } else {
        throw ConstructionError(label + ": an irreducible polynomial of degree " + std::to_string(k) +
                                " must be given");
    }
    if (modulus.size() != std::size_t(k) + 1 || modulus.back() != 1)
        throw ConstructionError(label + ": modulus must be monic of degree " + std::to_string(k));
    for (auto c : modulus)
        if (c >= p) throw ConstructionError(label + ": modulus coefficient out of range");
    if (!detail::irreducible(modulus, p)) throw ConstructionError(label + ": modulus is reducible");

    auto decode = [&](std::uint32_t idx) {
        detail::Poly f(k);
        for (std::uint32_t i = 0; i < k; ++i, idx /= p) f[i] = idx % p;
        return f;
    };
    auto encode = [&](const detail::Poly& f) {
        std::uint64_t idx = 0, w = 1;
        for (std::size_t i = 0; i < k; ++i, w *= p) idx += (i < f.size() ? f[i] : 0) * w;
        return static_cast<Elem>(idx);
    };
    std::vector<detail::Poly> polys(q);
    for (std::uint32_t a = 0; a < q; ++a) polys[a] = decode(a);

    std::vector<Elem> add(std::size_t(q) * q), mul(std::size_t(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) {
            detail::Poly s(k), t(2 * k - 1, 0);
            for (std::uint32_t i = 0; i < k; ++i) s[i] = (polys[a][i] + polys[b][i]) % p;
            for (std::uint32_t i = 0; i < k; ++i)
                for (std::uint32_t j = 0; j < k; ++j)
                    t[i + j] = static_cast<std::uint32_t>((t[i + j] + std::uint64_t(polys[a][i]) * polys[b][j]) % p);
            add[std::size_t(a) * q + b] = encode(s);
            mul[std::size_t(a) * q + b] = encode(detail::poly_mod(t, modulus, p));
        }
    std::vector<std::string> render(q);
    for (std::uint32_t a = 0; a < q; ++a) {
        std::vector<std::string> c;
        for (auto v : polys[a]) c.push_back(std::to_string(v));
        render[a] = detail::render_poly(c, "x");
    }
    return checked(FiniteRing::from_tables(label, q, std::move(add), std::move(mul), 0, 1, std::move(render)));
}

// Products and matrix-type rings.

inline FiniteRing direct_product(const std::vector<FiniteRing>& rings) {
    if (rings.empty()) throw ConstructionError("Prod requires at least one factor");
    std::string label = "Prod(";
    for (std::size_t i = 0; i < rings.size(); ++i) label += (i ? "," : "") + rings[i].label();
    label += ")";
    std::uint64_t order = 1;
    for (const auto& R : rings) order = order > UINT64_MAX / R.order() ? UINT64_MAX : order * R.order();
    require_order(order, label);

    BilinearSpec spec;
    spec.slot = rings;
    for (std::uint32_t t = 0; t < rings.size(); ++t) {
        spec.terms.push_back({{t, t, rings[t].one(), 0}});
        spec.one.push_back(rings[t].one());
    }
    return build_bilinear(label, spec, [&](std::span<const Elem> c) {
        std::string s = "(";
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + rings[i].render(c[i]);
        return s + ")";
    });
}

inline FiniteRing matrix_ring(std::uint32_t n, const FiniteRing& R) {
    if (n < 1) throw ConstructionError("M(n,R) requires n >= 1");
    return pattern_ring("M(" + std::to_string(n) + "," + R.label() + ")", R, full_matrix_pattern(n));
}

inline FiniteRing upper_triangular(std::uint32_t n, const FiniteRing& R) {
    if (n < 1) throw ConstructionError("T(n,R) requires n >= 1");
    return pattern_ring("T(" + std::to_string(n) + "," + R.label() + ")", R, upper_triangular_pattern(n));
}

inline FiniteRing constant_diag_triangular(std::uint32_t n, const FiniteRing& R) {
    if (n < 1) throw ConstructionError("Sn(n,R) requires n >= 1");
    return pattern_ring("Sn(" + std::to_string(n) + "," + R.label() + ")", R, constant_diagonal_pattern(n));
}

inline void require_central(const FiniteRing& R, Elem s) {
    check_index(R, s);
    if (!center(R).contains(s))
        throw ConstructionError("s not central: element " + std::to_string(s) + " of " + R.label());
}

/// K_s(R): [[a1,x1],[y1,b1]][[a2,x2],[y2,b2]] =
/// [[a1a2 + s x1y2, a1x2 + x1b2], [y1a2 + b1y2, s y1x2 + b1b2]].
inline FiniteRing formal_Ks(const FiniteRing& R, Elem s) {
    require_central(R, s);
    const std::string label = "Ks(" + R.label() + "," + std::to_string(s) + ")";
    require_order(saturating_pow(R.order(), 4), label);
    const Elem one = R.one();
    enum : std::uint32_t { A, X, Y, B };
    BilinearSpec spec;
    spec.slot = repeat_slot(R, 4);
    spec.terms = {
        {{A, A, one, 0}, {X, Y, s, 0}},
        {{A, X, one, 0}, {X, B, one, 0}},
        {{Y, A, one, 0}, {B, Y, one, 0}},
        {{Y, X, s, 0}, {B, B, one, 0}},
    };
    // s = 0 terms still multiply by zero; drop them
    for (auto& list : spec.terms)
        std::erase_if(list, [&](const Term& t) { return t.scalar == R.zero(); });
    spec.one = {one, R.zero(), R.zero(), one};
    return build_bilinear(label, spec, [&](std::span<const Elem> c) { return render_matrix(R, 2, c); });
}

/// Exponent of s in the (i,k,j) summand of a product in M_n(R;s):
/// 1 + [i=j] - [i=k] - [k=j]. Always 0, 1 or 2.
inline std::uint32_t mns_exponent(std::uint32_t i, std::uint32_t k, std::uint32_t j) {
    return static_cast<std::uint32_t>(1 + int(i == j) - int(i == k) - int(k == j));
}

inline FiniteRing formal_MnS(std::uint32_t n, const FiniteRing& R, Elem s) {
    if (n < 2) throw ConstructionError("MnS(n,R,s) requires n >= 2");
    require_central(R, s);
    const std::string label = "MnS(" + std::to_string(n) + "," + R.label() + "," + std::to_string(s) + ")";
    require_order(saturating_pow(R.order(), std::uint64_t(n) * n), label);
    const Elem power[3] = {R.one(), s, R.mul(s, s)};
    BilinearSpec spec;
    spec.slot = repeat_slot(R, std::size_t(n) * n);
    spec.terms.resize(std::size_t(n) * n);
    spec.one.assign(std::size_t(n) * n, R.zero());
    for (std::uint32_t i = 0; i < n; ++i) {
        spec.one[std::size_t(i) * n + i] = R.one();
        for (std::uint32_t j = 0; j < n; ++j)
            for (std::uint32_t k = 0; k < n; ++k) {
                const Elem w = power[mns_exponent(i, k, j)];
                if (w == R.zero()) continue;
                spec.terms[std::size_t(i) * n + j].push_back({i * n + k, k * n + j, w, 0});
            }
    }
    return build_bilinear(label, spec, [&](std::span<const Elem> c) { return render_matrix(R, n, c); });
}

/// T(R, R^k): (r, m)(r', m') = (r r', r m' + m r').
inline FiniteRing trivial_extension(const FiniteRing& R, std::uint32_t k = 1) {
    if (k < 1) throw ConstructionError("TrivExt(R,k) requires k >= 1");
    const std::string label = "TrivExt(" + R.label() + "," + std::to_string(k) + ")";
    require_order(saturating_pow(R.order(), k + 1), label);
    BilinearSpec spec;
    spec.slot = repeat_slot(R, k + 1);
    spec.terms.push_back({{0, 0, R.one(), 0}});
    for (std::uint32_t i = 1; i <= k; ++i) spec.terms.push_back({{0, i, R.one(), 0}, {i, 0, R.one(), 0}});
    spec.one.assign(k + 1, R.zero());
    spec.one[0] = R.one();
    return build_bilinear(label, spec, [&](std::span<const Elem> c) {
        std::string s = "(" + R.render(c[0]) + "|";
        for (std::size_t i = 1; i < c.size(); ++i) s += (i > 1 ? "," : "") + R.render(c[i]);
        return s + ")";
    });
}

// Group rings.

struct GroupRing {
    FiniteRing ring;
    FiniteGroup group;
    /// Augmentation: sum r_g g -> sum r_g.
    RingHom augmentation;
    /// Ker of the augmentation.
    ElementSubset augmentation_ideal;

    /// Index of the basis element 1*g.
    Elem basis(std::uint32_t g) const {
        const auto& R = augmentation.target;
        std::vector<Elem> c(group.order, R.zero());
        c[g] = R.one();
        return codec_for(repeat_slot(R, group.order)).encode(c);
    }
};

inline GroupRing group_ring(const FiniteRing& R, const FiniteGroup& G) {
    if (auto err = validate_group(G); !err.empty()) throw ConstructionError("invalid group " + G.label + ": " + err);
    const std::string label = "GR(" + R.label() + "," + G.label + ")";
    require_order(saturating_pow(R.order(), G.order), label);
    BilinearSpec spec;
    spec.slot = repeat_slot(R, G.order);
    spec.terms.resize(G.order);
    for (std::uint32_t g = 0; g < G.order; ++g)
        for (std::uint32_t h = 0; h < G.order; ++h) spec.terms[G.op(g, h)].push_back({g, h, R.one(), 0});
    spec.one.assign(G.order, R.zero());
    spec.one[G.identity] = R.one();
    const auto sym = detail::fresh_symbols(R, {{"g"}, {"h"}, {"k"}, {"G"}, {"H"}})[0];
    auto ring = build_bilinear(label, spec, [&](std::span<const Elem> c) {
        std::string s;
        for (std::uint32_t g = 0; g < c.size(); ++g) {
            if (c[g] == R.zero()) continue;
            if (!s.empty()) s += "+";
            s += (c[g] == R.one() ? "" : detail::paren(R.render(c[g])) + "*") + sym + std::to_string(g);
        }
        return s.empty() ? std::string("0") : s;
    });

    const auto codec = codec_for(spec.slot);
    std::vector<Elem> eps(ring.order());
    std::vector<Elem> kernel;
    for (Elem a = 0; a < ring.order(); ++a) {
        Elem sum = R.zero();
        for (Elem c : codec.decode(a)) sum = R.add(sum, c);
        eps[a] = sum;
        if (sum == R.zero()) kernel.push_back(a);
    }
    RingHom aug{ring, R, std::move(eps)};
    if (auto rep = verify_hom(aug); !rep.ok() || !rep.surjective)
        throw InvariantViolation(label + ": augmentation is not a surjective homomorphism");
    ElementSubset delta(ring.order(), std::move(kernel));
    return {ring, G, std::move(aug), std::move(delta)};
}

// Truncated skew polynomial rings.

/// A verified ring endomorphism alpha: R -> R.
struct EndomorphismSpec {
    FiniteRing ring;
    std::vector<Elem> map;
    std::string label = "explicit";
};

inline EndomorphismSpec make_endomorphism(const FiniteRing& R, std::vector<Elem> map, std::string label) {
    const auto report = verify_hom(RingHom{R, R, map});
    if (!report.ok()) throw ConstructionError("alpha is not an endomorphism of " + R.label() + ": " + *report.violation);
    return {R, std::move(map), std::move(label)};
}

/// Additive order of one.
inline std::uint32_t characteristic(const FiniteRing& R) {
    std::uint32_t n = 1;
    for (Elem x = R.one(); x != R.zero(); x = R.add(x, R.one())) ++n;
    return n;
}

/// a -> a^j.
inline EndomorphismSpec power_endomorphism(const FiniteRing& R, std::uint32_t j) {
    std::vector<Elem> map(R.order());
    for (Elem a = 0; a < R.order(); ++a) map[a] = R.pow(a, j);
    return make_endomorphism(R, std::move(map), "pow(" + std::to_string(j) + ")");
}

/// a -> a^p for p the (prime) characteristic.
inline EndomorphismSpec frobenius(const FiniteRing& R) {
    const auto p = characteristic(R);
    if (!is_prime(p)) throw ConstructionError("frobenius needs prime characteristic, " + R.label() + " has " + std::to_string(p));
    auto e = power_endomorphism(R, p);
    e.label = "frobenius";
    return e;
}

/// R[x; alpha]/<x^n> with x r = alpha(r) x.
inline FiniteRing skew_poly_quot(const FiniteRing& R, std::uint32_t n, const EndomorphismSpec& alpha) {
    if (n < 1) throw ConstructionError("SkewPolyQuot(R,n,alpha) requires n >= 1");
    if (!alpha.ring.same_as(R) && !alpha.ring.tables_equal(R))
        throw ConstructionError("alpha is defined on a different ring");
    const std::string label = "SkewPolyQuot(" + R.label() + "," + std::to_string(n) + "," + alpha.label + ")";
    require_order(saturating_pow(R.order(), n), label);
    BilinearSpec spec;
    spec.slot = repeat_slot(R, n);
    spec.terms.resize(n);
    spec.twist_powers.resize(n);
    std::vector<Elem> id(R.order());
    for (Elem a = 0; a < R.order(); ++a) id[a] = a;
    spec.twist_powers[0] = id;
    for (std::uint32_t k = 1; k < n; ++k) {
        spec.twist_powers[k].resize(R.order());
        for (Elem a = 0; a < R.order(); ++a) spec.twist_powers[k][a] = alpha.map[spec.twist_powers[k - 1][a]];
    }
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; i + j < n; ++j) spec.terms[i + j].push_back({i, j, R.one(), i});
    spec.one.assign(n, R.zero());
    spec.one[0] = R.one();
    const auto var = detail::fresh_symbols(R, {{"x"}, {"t"}, {"z"}, {"w"}, {"X"}, {"T"}})[0];
    return build_bilinear(label, spec, [&](std::span<const Elem> c) {
        std::vector<std::string> coeff;
        for (Elem e : c) coeff.push_back(R.render(e));
        return detail::render_poly(coeff, var.c_str(), true, R.render(R.zero()), R.render(R.one()));
    });
}

inline FiniteRing poly_quot(const FiniteRing& R, std::uint32_t n) {
    const std::string label = "PolyQuot(" + R.label() + "," + std::to_string(n) + ")";
    if (n < 1) throw ConstructionError("PolyQuot(R,n) requires n >= 1");
    require_order(saturating_pow(R.order(), n), label);
    BilinearSpec spec;
    spec.slot = repeat_slot(R, n);
    spec.terms.resize(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; i + j < n; ++j) spec.terms[i + j].push_back({i, j, R.one(), 0});
    spec.one.assign(n, R.zero());
    spec.one[0] = R.one();
    const auto var = detail::fresh_symbols(R, {{"x"}, {"t"}, {"z"}, {"w"}, {"X"}, {"T"}})[0];
    return build_bilinear(label, spec, [&](std::span<const Elem> c) {
        std::vector<std::string> coeff;
        for (Elem e : c) coeff.push_back(R.render(e));
        return detail::render_poly(coeff, var.c_str(), true, R.render(R.zero()), R.render(R.one()));
    });
}

// Block-Toeplitz families.

/// T_{n,m}(R) inside T_{n+m}(R): two upper Toeplitz blocks of sizes n and m
/// sharing the diagonal a; b_k on the k-th superdiagonal of the first block,
/// c_k on that of the second.
inline MatrixPattern tnm_pattern(std::uint32_t n, std::uint32_t m) {
    const std::uint32_t N = n + m;
    MatrixPattern P{N, n + m - 1, std::vector<int>(std::size_t(N) * N, -1)};
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i; j < n; ++j) P.cell[std::size_t(i) * N + j] = static_cast<int>(j - i);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = i; j < m; ++j)
            P.cell[std::size_t(n + i) * N + (n + j)] = j == i ? 0 : static_cast<int>(n - 1 + (j - i));
    return P;
}

/// S_{n,m}(R), size n+m-1: a top-left m x m upper Toeplitz block (d_k), a
/// bottom-right n x n upper Toeplitz block (b_k) sharing the corner entry,
/// and a free (m-1) x (n-1) block in the top-right corner.
inline MatrixPattern snm_pattern(std::uint32_t n, std::uint32_t m) {
    const std::uint32_t N = n + m - 1;
    const int b0 = 0;                                   // b_k -> k (b_0 = a)
    const int d0 = static_cast<int>(n) - 1;             // d_k -> d0 + k, k >= 1
    const int c0 = static_cast<int>(n + m) - 1;         // c(r, s) -> c0 + r (n-1) + s
    MatrixPattern P{N, n * m, std::vector<int>(std::size_t(N) * N, -1)};
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = i; j < m; ++j)
            P.cell[std::size_t(i) * N + j] = j == i ? 0 : d0 + static_cast<int>(j - i);
    for (std::uint32_t i = m - 1; i < N; ++i)
        for (std::uint32_t j = i; j < N; ++j) P.cell[std::size_t(i) * N + j] = b0 + static_cast<int>(j - i);
    for (std::uint32_t r = 0; r + 1 < m; ++r)
        for (std::uint32_t s = 0; s + 1 < n; ++s)
            P.cell[std::size_t(r) * N + (m + s)] = c0 + static_cast<int>(r * (n - 1) + s);
    return P;
}

/// U_n(R): upper triangular with constant diagonal a; rows 1, 3, 5, ...
/// (1-based) carry the Toeplitz sequence b_1, b_2, ... and rows 2, 4, ...
/// carry c_1, c_2, ... to the right of the diagonal.
inline MatrixPattern un_pattern(std::uint32_t n) {
    MatrixPattern P{n, 2 * n - 2, std::vector<int>(std::size_t(n) * n, -1)};
    for (std::uint32_t i = 0; i < n; ++i) {
        P.cell[std::size_t(i) * n + i] = 0;
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const int k = static_cast<int>(j - i);
            P.cell[std::size_t(i) * n + j] = (i % 2 == 0) ? k : static_cast<int>(n) - 1 + k;
        }
    }
    return P;
}

inline FiniteRing family_Tnm(std::uint32_t n, std::uint32_t m, const FiniteRing& R) {
    if (n < 1 || m < 1) throw ConstructionError("Tnm(n,m,R) requires n, m >= 1");
    return pattern_ring("Tnm(" + std::to_string(n) + "," + std::to_string(m) + "," + R.label() + ")", R,
                        tnm_pattern(n, m));
}

inline FiniteRing family_Snm(std::uint32_t n, std::uint32_t m, const FiniteRing& R) {
    if (n < 1 || m < 1) throw ConstructionError("Snm(n,m,R) requires n, m >= 1");
    return pattern_ring("Snm(" + std::to_string(n) + "," + std::to_string(m) + "," + R.label() + ")", R,
                        snm_pattern(n, m));
}

inline FiniteRing family_Un(std::uint32_t n, const FiniteRing& R) {
    if (n < 2) throw ConstructionError("Un(n,R) requires n >= 2");
    return pattern_ring("Un(" + std::to_string(n) + "," + R.label() + ")", R, un_pattern(n));
}

/// R[x,y | x^n = xy = y^m = 0] on the basis 1, x..x^{n-1}, y..y^{m-1}.
inline FiniteRing family_Anm(std::uint32_t n, std::uint32_t m, const FiniteRing& R) {
    if (n < 2 || m < 2) throw ConstructionError("Anm(n,m,R) requires n, m >= 2");
    const std::string label = "Anm(" + std::to_string(n) + "," + std::to_string(m) + "," + R.label() + ")";
    const std::uint32_t d = n + m - 1;
    require_order(saturating_pow(R.order(), d), label);
    auto xi = [&](std::uint32_t i) { return i; };                    // x^i, i < n
    auto yj = [&](std::uint32_t j) { return j == 0 ? 0 : n - 1 + j; };  // y^j, j < m
    BilinearSpec spec;
    spec.slot = repeat_slot(R, d);
    spec.terms.resize(d);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t k = 0; i + k < n; ++k) spec.terms[xi(i + k)].push_back({xi(i), xi(k), R.one(), 0});
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t k = 0; i + k < m; ++k) {
            if (i + k == 0) continue;  // constant term already counted
            spec.terms[yj(i + k)].push_back({yj(i), yj(k), R.one(), 0});
        }
    spec.one.assign(d, R.zero());
    spec.one[0] = R.one();
    const auto v = detail::fresh_symbols(R, {{"x", "y"}, {"s", "t"}, {"u", "v"}, {"X", "Y"}});
    return build_bilinear(label, spec, [&](std::span<const Elem> c) {
        std::string s;
        auto term = [&](Elem coeff, const std::string& mono) {
            if (coeff == R.zero()) return;
            if (!s.empty()) s += "+";
            if (mono.empty()) s += R.render(coeff);
            else s += (coeff == R.one() ? "" : detail::paren(R.render(coeff))) + mono;
        };
        term(c[0], "");
        for (std::uint32_t i = 1; i < n; ++i) term(c[xi(i)], i == 1 ? v[0] : v[0] + "^" + std::to_string(i));
        for (std::uint32_t j = 1; j < m; ++j) term(c[yj(j)], j == 1 ? v[1] : v[1] + "^" + std::to_string(j));
        return s.empty() ? R.render(R.zero()) : s;
    });
}

/// R<x,y | x^n = xy = y^m = 0> on the basis y^i x^j (i < m, j < n).
inline FiniteRing family_Bnm(std::uint32_t n, std::uint32_t m, const FiniteRing& R) {
    if (n < 2 || m < 2) throw ConstructionError("Bnm(n,m,R) requires n, m >= 2");
    const std::string label = "Bnm(" + std::to_string(n) + "," + std::to_string(m) + "," + R.label() + ")";
    const std::uint32_t d = n * m;
    require_order(saturating_pow(R.order(), d), label);
    auto at = [&](std::uint32_t i, std::uint32_t j) { return i * n + j; };
    BilinearSpec spec;
    spec.slot = repeat_slot(R, d);
    spec.terms.resize(d);
    for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < m; ++c)
                for (std::uint32_t e = 0; e < n; ++e) {
                    if (b > 0 && c > 0) continue;  // x y = 0
                    if (a + c >= m || b + e >= n) continue;
                    spec.terms[at(a + c, b + e)].push_back({at(a, b), at(c, e), R.one(), 0});
                }
    spec.one.assign(d, R.zero());
    spec.one[0] = R.one();
    const auto v = detail::fresh_symbols(R, {{"x", "y"}, {"s", "t"}, {"u", "v"}, {"X", "Y"}});
    return build_bilinear(label, spec, [&](std::span<const Elem> c) {
        std::string s;
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = 0; j < n; ++j) {
                const Elem coeff = c[at(i, j)];
                if (coeff == R.zero()) continue;
                std::string mono;
                if (i) mono += i == 1 ? v[1] : v[1] + "^" + std::to_string(i);
                if (j) mono += j == 1 ? v[0] : v[0] + "^" + std::to_string(j);
                if (!s.empty()) s += "+";
                if (mono.empty()) s += R.render(coeff);
                else s += (coeff == R.one() ? "" : detail::paren(R.render(coeff))) + mono;
            }
        return s.empty() ? R.render(R.zero()) : s;
    });
}

// Subrings and quotients.

/// eRe with identity e, indexed ascending over the parent's indices.
struct Corner {
    FiniteRing ring;
    /// Parent index of each corner element.
    std::vector<Elem> embed;
};

inline Corner corner_ring_with_embedding(const FiniteRing& R, Elem e) {
    check_index(R, e);
    if (R.mul(e, e) != e) throw ConstructionError("Corner: element " + std::to_string(e) + " is not idempotent");
    if (e == R.zero()) throw ConstructionError("Corner: idempotent must be nonzero");
    const std::string label = "Corner(" + R.label() + "," + std::to_string(e) + ")";
    std::vector<bool> mask(R.order(), false);
    for (Elem x = 0; x < R.order(); ++x) mask[R.mul(R.mul(e, x), e)] = true;
    std::vector<Elem> embed;
    std::vector<Elem> local(R.order(), R.order());
    for (Elem x = 0; x < R.order(); ++x)
        if (mask[x]) {
            local[x] = static_cast<Elem>(embed.size());
            embed.push_back(x);
        }
    const auto m = static_cast<std::uint32_t>(embed.size());
    std::vector<Elem> add(std::size_t(m) * m), mul(std::size_t(m) * m);
    std::vector<std::string> render(m);
    for (Elem a = 0; a < m; ++a) {
        render[a] = R.render(embed[a]);
        for (Elem b = 0; b < m; ++b) {
            add[std::size_t(a) * m + b] = local[R.add(embed[a], embed[b])];
            mul[std::size_t(a) * m + b] = local[R.mul(embed[a], embed[b])];
        }
    }
    auto ring = checked(FiniteRing::from_tables(label, m, std::move(add), std::move(mul), local[R.zero()], local[e],
                                                std::move(render)));
    return {ring, std::move(embed)};
}

inline FiniteRing corner_ring(const FiniteRing& R, Elem e) { return corner_ring_with_embedding(R, e).ring; }

/// R/I for a two-sided ideal I, with the verified projection.
inline Quotient quotient_ring(const FiniteRing& R, const ElementSubset& I) {
    if (I.ring_order() != R.order()) throw ConstructionError("Quot: subset belongs to a different ring");
    if (auto c = is_two_sided_ideal(R, I); !c.holds)
        throw ConstructionError("Quot: subset is not an ideal (" + c.witness->reason + ")");
    auto q = detail::quotient_unchecked(R, I, "Quot(" + R.label() + "," + detail::subset_label(I) + ")");
    q.ring = checked(q.ring);
    q.projection.target = q.ring;
    const auto report = verify_hom(q.projection);
    if (!report.ok() || !report.surjective || !(report.kernel == I))
        throw InvariantViolation(q.ring.label() + ": projection check failed");
    return q;
}

}  // namespace finring
