#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "finring/error.hpp"

namespace finring {

/// A finite group given by its Cayley table. Element 0 is the identity.
struct FiniteGroup {
    std::uint32_t order = 1;
    std::vector<std::uint32_t> cayley{0};
    std::uint32_t identity = 0;
    std::vector<std::uint32_t> inv{0};
    std::string label = "C(1)";

    std::uint32_t op(std::uint32_t g, std::uint32_t h) const { return cayley[std::size_t(g) * order + h]; }

    bool is_two_group() const noexcept { return order != 0 && (order & (order - 1)) == 0; }

    /// Least k >= 1 with g^k = e for every g.
    std::uint32_t exponent() const {
        std::uint64_t lcm = 1;
        for (std::uint32_t g = 0; g < order; ++g) {
            std::uint64_t k = 1;
            for (std::uint32_t x = g; x != identity; x = op(x, g)) ++k;
            lcm = std::lcm(lcm, k);
        }
        return static_cast<std::uint32_t>(lcm);
    }
};

/// Checks the group axioms on the Cayley table; returns an empty string when valid.
inline std::string validate_group(const FiniteGroup& G) {
    const auto n = G.order;
    if (G.cayley.size() != std::size_t(n) * n || G.inv.size() != n) return "table shape";
    if (G.identity != 0) return "identity must be element 0";
    for (std::uint32_t a = 0; a < n; ++a) {
        if (G.op(a, 0) != a || G.op(0, a) != a) return "identity law at " + std::to_string(a);
        if (G.op(a, G.inv[a]) != 0 || G.op(G.inv[a], a) != 0) return "inverse law at " + std::to_string(a);
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c)
                if (G.op(G.op(a, b), c) != G.op(a, G.op(b, c)))
                    return "associativity at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")";
    }
    return {};
}

inline FiniteGroup cyclic_group(std::uint32_t n) {
    if (n < 1) throw ConstructionError("cyclic group order must be >= 1");
    FiniteGroup G;
    G.order = n;
    G.label = "C(" + std::to_string(n) + ")";
    G.cayley.resize(std::size_t(n) * n);
    G.inv.resize(n);
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) G.cayley[std::size_t(a) * n + b] = (a + b) % n;
        G.inv[a] = (n - a) % n;
    }
    return G;
}

/// Direct product; (g, h) has index g * |H| + h.
inline FiniteGroup group_product(const FiniteGroup& G, const FiniteGroup& H) {
    FiniteGroup P;
    P.order = G.order * H.order;
    P.label = "GxG(" + G.label + "," + H.label + ")";
    P.cayley.resize(std::size_t(P.order) * P.order);
    P.inv.resize(P.order);
    for (std::uint32_t a = 0; a < P.order; ++a) {
        const auto ga = a / H.order, ha = a % H.order;
        P.inv[a] = G.inv[ga] * H.order + H.inv[ha];
        for (std::uint32_t b = 0; b < P.order; ++b) {
            const auto gb = b / H.order, hb = b % H.order;
            P.cayley[std::size_t(a) * P.order + b] = G.op(ga, gb) * H.order + H.op(ha, hb);
        }
    }
    return P;
}

}  // namespace finring
