#pragma once

/**
 * @file builder.hpp
 * @brief Rings given by coordinates and bilinear structure constants.
 *
 * Most ring families in this library have a carrier of the form
 * S_0 x S_1 x ... x S_{d-1} (each S_i a previously built ring) with
 * componentwise addition and a product whose t-th coordinate is a sum of
 * terms scalar * a_p * alpha^k(b_q), all computed in S_t. BilinearSpec
 * describes such a product; build_bilinear materializes the tables.
 *
 * Element indices are big-endian mixed radix over the coordinate list: the
 * first coordinate is the most significant digit.
 *
 * MatrixPattern describes subrings of n x n matrices in which every cell is
 * either a structural zero or carries one of the free coordinates. The
 * pattern is checked symbolically: the product of two generic elements must
 * stay in the pattern (zero cells receive no terms and cells sharing a
 * coordinate receive identical terms).
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "finring/error.hpp"
#include "finring/ring.hpp"

namespace finring {

struct Term {
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    /// Central scalar multiplying the term; one() for none.
    Elem scalar = 0;
    /// Apply the twist map this many times to the right factor.
    std::uint32_t twist = 0;
};

struct BilinearSpec {
    std::vector<FiniteRing> slot;
    std::vector<std::vector<Term>> terms;
    std::vector<Elem> one;
    /// twist_powers[k] is alpha^k as an element table on the slot ring(s).
    std::vector<std::vector<Elem>> twist_powers;
};

/// Mixed-radix codec for coordinate tuples (big-endian).
class CoordinateCodec {
public:
    CoordinateCodec() = default;
    explicit CoordinateCodec(std::vector<std::uint32_t> radix) : radix_(std::move(radix)) {
        weight_.assign(radix_.size(), 1);
        for (std::size_t i = radix_.size(); i-- > 1;) weight_[i - 1] = weight_[i] * radix_[i];
    }

    std::uint64_t order() const {
        std::uint64_t n = 1;
        for (auto r : radix_) n = (n > UINT64_MAX / r) ? UINT64_MAX : n * r;
        return n;
    }
    std::size_t dims() const noexcept { return radix_.size(); }

    Elem encode(std::span<const Elem> c) const {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < c.size(); ++i) idx += weight_[i] * c[i];
        return static_cast<Elem>(idx);
    }
    void decode(Elem idx, std::span<Elem> out) const {
        for (std::size_t i = 0; i < radix_.size(); ++i) {
            out[i] = static_cast<Elem>((idx / weight_[i]) % radix_[i]);
        }
    }
    std::vector<Elem> decode(Elem idx) const {
        std::vector<Elem> out(radix_.size());
        decode(idx, out);
        return out;
    }

private:
    std::vector<std::uint32_t> radix_;
    std::vector<std::uint64_t> weight_;
};

inline CoordinateCodec codec_for(const std::vector<FiniteRing>& slots) {
    std::vector<std::uint32_t> radix;
    radix.reserve(slots.size());
    for (const auto& s : slots) radix.push_back(s.order());
    return CoordinateCodec(std::move(radix));
}

inline std::vector<FiniteRing> repeat_slot(const FiniteRing& R, std::size_t d) { return std::vector<FiniteRing>(d, R); }

/// Materializes the ring described by `spec`. `render` maps a coordinate
/// tuple to a display string. The result is validated before it is returned.
template <class Render>
FiniteRing build_bilinear(const std::string& label, const BilinearSpec& spec, Render&& render) {
    const std::size_t d = spec.slot.size();
    if (d == 0 || spec.terms.size() != d || spec.one.size() != d)
        throw ConstructionError(label + ": malformed coordinate specification");
    const auto codec = codec_for(spec.slot);
    const std::uint64_t order64 = codec.order();
    require_order(order64, label);
    if (order64 > UINT32_MAX) throw CapExceeded(label, order64, UINT32_MAX);
    const auto n = static_cast<std::uint32_t>(order64);

    std::vector<const Elem*> addt(d), mult(d);
    std::vector<std::uint32_t> q(d);
    std::vector<Elem> zero(d), unit(d);
    for (std::size_t t = 0; t < d; ++t) {
        unit[t] = spec.slot[t].one();
        addt[t] = spec.slot[t].add_table().data();
        mult[t] = spec.slot[t].mul_table().data();
        q[t] = spec.slot[t].order();
        zero[t] = spec.slot[t].zero();
        for (const auto& term : spec.terms[t])
            if (term.left >= d || term.right >= d || spec.slot[term.left].order() != q[t] ||
                spec.slot[term.right].order() != q[t])
                throw ConstructionError(label + ": term mixes coordinate rings");
    }

    std::vector<Elem> coords(std::size_t(n) * d);
    for (Elem a = 0; a < n; ++a) codec.decode(a, std::span<Elem>(coords.data() + std::size_t(a) * d, d));

    std::vector<std::uint64_t> weight(d, 1);
    for (std::size_t t = d; t-- > 1;) weight[t - 1] = weight[t] * q[t];

    // Per left operand, each term is reduced to a row lookup on the right
    // coordinate, optionally through a twist table and a scalar row.
    struct Bound {
        const Elem* row;
        const Elem* scale;
        const Elem* twist;
        std::uint32_t right;
    };
    std::vector<std::size_t> first(d + 1, 0);
    for (std::size_t t = 0; t < d; ++t) first[t + 1] = first[t] + spec.terms[t].size();
    std::vector<Bound> bound(first[d]);
    std::vector<const Elem*> add_row(d);

    std::vector<Elem> add(std::size_t(n) * n), mul(std::size_t(n) * n);
    for (Elem a = 0; a < n; ++a) {
        const Elem* ca = coords.data() + std::size_t(a) * d;
        for (std::size_t t = 0; t < d; ++t) {
            add_row[t] = addt[t] + std::size_t(ca[t]) * q[t];
            for (std::size_t k = 0; k < spec.terms[t].size(); ++k) {
                const auto& term = spec.terms[t][k];
                bound[first[t] + k] = {mult[t] + std::size_t(ca[term.left]) * q[t],
                                       term.scalar == unit[t] ? nullptr : mult[t] + std::size_t(term.scalar) * q[t],
                                       term.twist ? spec.twist_powers[term.twist].data() : nullptr, term.right};
            }
        }
        Elem* add_out = add.data() + std::size_t(a) * n;
        Elem* mul_out = mul.data() + std::size_t(a) * n;
        for (Elem b = 0; b < n; ++b) {
            const Elem* cb = coords.data() + std::size_t(b) * d;
            std::uint64_t sum = 0, prod = 0;
            for (std::size_t t = 0; t < d; ++t) {
                sum += weight[t] * add_row[t][cb[t]];
                const Elem* A = addt[t];
                const std::size_t Q = q[t];
                Elem acc = zero[t];
                for (std::size_t k = first[t]; k < first[t + 1]; ++k) {
                    const Bound& bt = bound[k];
                    Elem rhs = cb[bt.right];
                    if (bt.twist) rhs = bt.twist[rhs];
                    Elem v = bt.row[rhs];
                    if (bt.scale) v = bt.scale[v];
                    acc = A[std::size_t(acc) * Q + v];
                }
                prod += weight[t] * acc;
            }
            add_out[b] = static_cast<Elem>(sum);
            mul_out[b] = static_cast<Elem>(prod);
        }
    }

    std::vector<std::string> renders(n);
    for (Elem a = 0; a < n; ++a)
        renders[a] = render(std::span<const Elem>(coords.data() + std::size_t(a) * d, d));

    auto R = FiniteRing::from_tables(label, n, std::move(add), std::move(mul), codec.encode(zero),
                                     codec.encode(spec.one), std::move(renders));
    return checked(std::move(R));
}

// Matrix patterns.

struct MatrixPattern {
    std::uint32_t size = 0;
    std::uint32_t coords = 0;
    /// Row-major; -1 marks a structural zero, otherwise a coordinate index.
    std::vector<int> cell;

    int at(std::uint32_t i, std::uint32_t j) const { return cell[std::size_t(i) * size + j]; }
};

inline MatrixPattern full_matrix_pattern(std::uint32_t n) {
    MatrixPattern P{n, n * n, std::vector<int>(std::size_t(n) * n)};
    for (std::uint32_t i = 0; i < n * n; ++i) P.cell[i] = static_cast<int>(i);
    return P;
}

/// Upper triangular; coordinates are the cells on or above the diagonal, row-major.
inline MatrixPattern upper_triangular_pattern(std::uint32_t n) {
    MatrixPattern P{n, 0, std::vector<int>(std::size_t(n) * n, -1)};
    int c = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i; j < n; ++j) P.cell[std::size_t(i) * n + j] = c++;
    P.coords = static_cast<std::uint32_t>(c);
    return P;
}

/// S_n: constant diagonal (coordinate 0) then strictly upper cells, row-major.
inline MatrixPattern constant_diagonal_pattern(std::uint32_t n) {
    MatrixPattern P{n, 1, std::vector<int>(std::size_t(n) * n, -1)};
    int c = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        P.cell[std::size_t(i) * n + i] = 0;
        for (std::uint32_t j = i + 1; j < n; ++j) P.cell[std::size_t(i) * n + j] = c++;
    }
    P.coords = static_cast<std::uint32_t>(c);
    return P;
}

/// Structure constants of a pattern ring, after the symbolic closure check.
inline BilinearSpec pattern_spec(const std::string& label, const FiniteRing& base, const MatrixPattern& P) {
    const std::uint32_t N = P.size;
    if (P.cell.size() != std::size_t(N) * N || P.coords == 0)
        throw ConstructionError(label + ": malformed matrix pattern");

    using Pair = std::pair<int, int>;
    std::vector<std::vector<Pair>> cell_terms(std::size_t(N) * N);
    for (std::uint32_t i = 0; i < N; ++i)
        for (std::uint32_t j = 0; j < N; ++j) {
            auto& list = cell_terms[std::size_t(i) * N + j];
            for (std::uint32_t k = 0; k < N; ++k)
                if (P.at(i, k) >= 0 && P.at(k, j) >= 0) list.emplace_back(P.at(i, k), P.at(k, j));
            std::sort(list.begin(), list.end());
        }

    std::vector<std::optional<std::size_t>> rep(P.coords);
    std::vector<bool> on_diag(P.coords, false), off_diag(P.coords, false);
    for (std::uint32_t i = 0; i < N; ++i)
        for (std::uint32_t j = 0; j < N; ++j) {
            const int t = P.at(i, j);
            const std::size_t idx = std::size_t(i) * N + j;
            if (t < 0) {
                if (!cell_terms[idx].empty())
                    throw ConstructionError(label + ": pattern not closed under multiplication (zero cell " +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
                continue;
            }
            if (t >= static_cast<int>(P.coords)) throw ConstructionError(label + ": coordinate out of range");
            (i == j ? on_diag : off_diag)[t] = true;
            if (!rep[t]) {
                rep[t] = idx;
            } else if (cell_terms[*rep[t]] != cell_terms[idx]) {
                throw ConstructionError(label + ": pattern not closed under multiplication (coordinate " +
                                        std::to_string(t) + ")");
            }
        }

    BilinearSpec spec;
    spec.slot = repeat_slot(base, P.coords);
    spec.terms.resize(P.coords);
    spec.one.assign(P.coords, base.zero());
    for (std::uint32_t t = 0; t < P.coords; ++t) {
        if (!rep[t]) throw ConstructionError(label + ": coordinate " + std::to_string(t) + " has no cell");
        if (on_diag[t] && off_diag[t])
            throw ConstructionError(label + ": identity matrix is not in the pattern");
        if (on_diag[t]) spec.one[t] = base.one();
        for (const auto& [p, qq] : cell_terms[*rep[t]])
            spec.terms[t].push_back({static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(qq), base.one(), 0});
    }
    for (std::uint32_t i = 0; i < N; ++i)
        if (P.at(i, i) < 0) throw ConstructionError(label + ": identity matrix is not in the pattern");
    return spec;
}

inline std::string render_matrix(const FiniteRing& base, std::uint32_t N, std::span<const Elem> entries) {
    std::string s = "[";
    for (std::uint32_t i = 0; i < N; ++i) {
        s += i ? ",[" : "[";
        for (std::uint32_t j = 0; j < N; ++j) {
            if (j) s += ",";
            s += base.render(entries[std::size_t(i) * N + j]);
        }
        s += "]";
    }
    return s + "]";
}

/// Full N x N matrix (base indices) of the element with coordinates `c`.
inline std::vector<Elem> pattern_expand(const FiniteRing& base, const MatrixPattern& P, std::span<const Elem> c) {
    std::vector<Elem> m(P.cell.size(), base.zero());
    for (std::size_t i = 0; i < m.size(); ++i)
        if (P.cell[i] >= 0) m[i] = c[P.cell[i]];
    return m;
}

inline FiniteRing pattern_ring(const std::string& label, const FiniteRing& base, const MatrixPattern& P) {
    require_order(saturating_pow(base.order(), P.coords), label);
    const auto spec = pattern_spec(label, base, P);
    return build_bilinear(label, spec, [&](std::span<const Elem> c) {
        return render_matrix(base, P.size, pattern_expand(base, P, c));
    });
}

/// Matrix of element `idx` of pattern_ring(base, P).
inline std::vector<Elem> pattern_matrix(const FiniteRing& base, const MatrixPattern& P, Elem idx) {
    const CoordinateCodec codec(std::vector<std::uint32_t>(P.coords, base.order()));
    const auto c = codec.decode(idx);
    return pattern_expand(base, P, c);
}

/// Index of a matrix in pattern_ring(base, P), or nullopt when it does not fit the pattern.
inline std::optional<Elem> pattern_index(const FiniteRing& base, const MatrixPattern& P,
                                         std::span<const Elem> matrix) {
    if (matrix.size() != P.cell.size()) return std::nullopt;
    std::vector<std::optional<Elem>> c(P.coords);
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        const int t = P.cell[i];
        if (t < 0) {
            if (matrix[i] != base.zero()) return std::nullopt;
        } else if (!c[t]) {
            c[t] = matrix[i];
        } else if (*c[t] != matrix[i]) {
            return std::nullopt;
        }
    }
    std::vector<Elem> flat(P.coords);
    for (std::uint32_t t = 0; t < P.coords; ++t) flat[t] = *c[t];
    const CoordinateCodec codec(std::vector<std::uint32_t>(P.coords, base.order()));
    return codec.encode(flat);
}

}  // namespace finring
