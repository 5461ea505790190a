#include <gtest/gtest.h>

#include <finring.hpp>

#include "oracle.hpp"

using namespace finring;

namespace {

std::vector<Elem> identity_map(std::uint32_t n) {
    std::vector<Elem> m(n);
    for (Elem i = 0; i < n; ++i) m[i] = i;
    return m;
}

/// Index of a coordinate tuple under big-endian mixed radix.
Elem encode(std::initializer_list<Elem> coords, std::uint32_t radix) {
    Elem idx = 0;
    for (Elem c : coords) idx = idx * radix + c;
    return idx;
}

}  // namespace

TEST(Zmod, Basics) {
    const auto Z2 = zmod(2);
    EXPECT_EQ(Z2.order(), 2u);
    EXPECT_TRUE(oracle::boolean(Z2));
    EXPECT_EQ(oracle::units(zmod(4)), (std::vector<Elem>{1, 3}));
    EXPECT_THROW(zmod(1), ConstructionError);
    EXPECT_THROW(zmod(0), ConstructionError);
}

TEST(GaloisField, PrimeAndBuiltIns) {
    EXPECT_TRUE(galois_field(2, 1).tables_equal(zmod(2)));
    for (auto [p, k, q] : {std::tuple{2u, 2u, 4u}, {2u, 3u, 8u}, {3u, 1u, 3u}, {5u, 1u, 5u}}) {
        const auto F = galois_field(p, k);
        EXPECT_EQ(F.order(), q);
        EXPECT_EQ(oracle::units(F).size(), q - 1) << F.label();
    }
}

TEST(GaloisField, ExplicitModulus) {
    // x^2 + 1 = (x + 1)^2 over F2; x^2 + 1 is irreducible over F3.
    EXPECT_THROW(galois_field(2, 2, std::vector<std::uint32_t>{1, 0, 1}), ConstructionError);
    const auto F9 = galois_field(3, 2, std::vector<std::uint32_t>{1, 0, 1});
    EXPECT_EQ(F9.order(), 9u);
    EXPECT_EQ(oracle::units(F9).size(), 8u);
    EXPECT_THROW(galois_field(3, 2), ConstructionError);  // no built-in modulus
    EXPECT_THROW(galois_field(4, 1), ConstructionError);  // not prime
    EXPECT_THROW(galois_field(2, 2, std::vector<std::uint32_t>{1, 1}), ConstructionError);  // wrong degree
}

TEST(GaloisField, LittleEndianCoefficients) {
    // Index 2 is w (coefficients (0,1)); w^2 = w + 1 is index 3 under x^2 + x + 1.
    const auto F4 = galois_field(2, 2);
    EXPECT_EQ(F4.mul(2, 2), 3u);
    EXPECT_EQ(F4.mul(2, 3), 1u);
}

TEST(DirectProduct, Examples) {
    const auto P = direct_product({zmod(2), zmod(2)});
    EXPECT_EQ(P.order(), 4u);
    EXPECT_TRUE(oracle::boolean(P));
    EXPECT_TRUE(verify_isomorphism({direct_product({zmod(2), zmod(3)}), zmod(6), oracle::crt_map(2, 3)}));
    EXPECT_TRUE(direct_product({zmod(5)}).tables_equal(zmod(5)));
    // Lexicographic order: (x, y) -> x * |S| + y.
    const auto Q = direct_product({zmod(3), zmod(4)});
    for (Elem x = 0; x < 3; ++x)
        for (Elem y = 0; y < 4; ++y)
            EXPECT_EQ(Q.mul(x * 4 + y, x * 4 + y), ((x * x) % 3) * 4 + (y * y) % 4);
}

TEST(MatrixRing, AgreesWithExplicitMatrices) {
    for (std::uint32_t p : {2u, 3u, 4u}) {
        const auto M = matrix_ring(2, zmod(p));
        const oracle::MatrixModP O{2, p};
        ASSERT_EQ(M.order(), O.count());
        for (Elem a = 0; a < M.order(); ++a)
            for (Elem b = 0; b < M.order(); ++b) ASSERT_EQ(M.mul(a, b), O.encode(O.mul(O.decode(a), O.decode(b))));
        EXPECT_EQ(M.one(), O.encode(O.identity()));
    }
}

TEST(MatrixRing, Examples) {
    EXPECT_TRUE(matrix_ring(1, zmod(3)).tables_equal(zmod(3)));
    const auto M = matrix_ring(2, zmod(2));
    EXPECT_EQ(M.order(), 16u);
    EXPECT_EQ(oracle::units(M).size(), oracle::gl2_count(2));
    EXPECT_EQ(oracle::gl2_count(2), 6u);
    EXPECT_EQ(matrix_ring(2, zmod(4)).order(), 256u);
}

TEST(UpperTriangular, Examples) {
    const auto T = upper_triangular(2, zmod(2));
    EXPECT_EQ(T.order(), 8u);
    // Coordinates (a11, a12, a22): units are exactly a11 = a22 = 1.
    EXPECT_EQ(oracle::units(T), (std::vector<Elem>{encode({1, 0, 1}, 2), encode({1, 1, 1}, 2)}));
    EXPECT_TRUE(upper_triangular(1, zmod(4)).tables_equal(zmod(4)));
}

TEST(ConstantDiagonal, Examples) {
    EXPECT_EQ(constant_diag_triangular(3, zmod(2)).order(), 16u);
    EXPECT_TRUE(constant_diag_triangular(1, zmod(3)).tables_equal(zmod(3)));
    for (const auto& R : {zmod(2), zmod(3), zmod(4), galois_field(2, 2)}) {
        const auto S2 = constant_diag_triangular(2, R);
        const auto T = trivial_extension(R, 1);
        EXPECT_TRUE(verify_isomorphism({S2, T, identity_map(T.order())})) << R.label();
    }
}

TEST(FormalKs, UnitParameterIsMatrixRing) {
    for (const auto& R : {zmod(2), zmod(3), zmod(4)}) {
        const auto K = formal_Ks(R, R.one());
        const auto M = matrix_ring(2, R);
        EXPECT_TRUE(verify_isomorphism({K, M, identity_map(M.order())})) << R.label();
    }
}

TEST(FormalKs, DisplayedProduct) {
    const auto K = formal_Ks(zmod(4), 2);
    EXPECT_EQ(K.mul(encode({0, 1, 1, 0}, 4), encode({0, 1, 1, 0}, 4)), encode({2, 0, 0, 2}, 4));
    // Full rule against hand arithmetic on tuples.
    const Elem s = 3;
    const auto K3 = formal_Ks(zmod(4), s);
    for (Elem i = 0; i < K3.order(); i += 7)
        for (Elem j = 0; j < K3.order(); j += 5) {
            const Elem a1 = i >> 6, x1 = (i >> 4) & 3, y1 = (i >> 2) & 3, b1 = i & 3;
            const Elem a2 = j >> 6, x2 = (j >> 4) & 3, y2 = (j >> 2) & 3, b2 = j & 3;
            const Elem want = encode({(a1 * a2 + s * x1 * y2) % 4, (a1 * x2 + x1 * b2) % 4, (y1 * a2 + b1 * y2) % 4,
                                      (s * y1 * x2 + b1 * b2) % 4},
                                     4);
            ASSERT_EQ(K3.mul(i, j), want);
        }
}

TEST(FormalKs, ZeroParameterKillsOffDiagonalProducts) {
    const auto K = formal_Ks(zmod(2), 0);
    for (Elem x = 0; x < 2; ++x)
        for (Elem y = 0; y < 2; ++y)
            for (Elem x2 = 0; x2 < 2; ++x2)
                for (Elem y2 = 0; y2 < 2; ++y2)
                    EXPECT_EQ(K.mul(encode({0, x, y, 0}, 2), encode({0, x2, y2, 0}, 2)), K.zero());
}

TEST(FormalKs, NonCentralParameterRejected) {
    const auto M = matrix_ring(2, zmod(2));
    const auto central = oracle::center(M);
    ASSERT_EQ(std::count(central.begin(), central.end(), Elem{3}), 0);
    try {
        formal_Ks(M, 3);
        FAIL() << "expected an error";
    } catch (const ConstructionError& e) {
        EXPECT_NE(std::string(e.what()).find("s not central"), std::string::npos);
    }
}

TEST(FormalMnS, ExponentTable) {
    // One-based (1,1,1), (1,2,1), (1,2,3).
    EXPECT_EQ(mns_exponent(0, 0, 0), 0u);
    EXPECT_EQ(mns_exponent(0, 1, 0), 2u);
    EXPECT_EQ(mns_exponent(0, 1, 2), 1u);
    for (std::uint32_t i = 0; i < 4; ++i)
        for (std::uint32_t k = 0; k < 4; ++k)
            for (std::uint32_t j = 0; j < 4; ++j) EXPECT_LE(mns_exponent(i, k, j), 2u);
}

TEST(FormalMnS, TwoByTwoIsKsOfSquare) {
    for (const auto& R : {zmod(2), zmod(3), zmod(4)})
        for (Elem s = 0; s < R.order(); ++s) {
            const auto M = formal_MnS(2, R, s);
            const auto K = formal_Ks(R, R.mul(s, s));
            EXPECT_TRUE(verify_isomorphism({M, K, identity_map(K.order())})) << R.label() << " s=" << s;
        }
}

TEST(FormalMnS, UnitParameterIsMatrixRing) {
    for (std::uint32_t n : {2u, 3u}) {
        const auto M = formal_MnS(n, zmod(2), 1);
        const auto F = matrix_ring(n, zmod(2));
        EXPECT_TRUE(verify_isomorphism({M, F, identity_map(F.order())}));
    }
    EXPECT_THROW(formal_MnS(1, zmod(2), 1), ConstructionError);
    EXPECT_THROW(formal_MnS(3, zmod(4), 1), CapExceeded);
}

TEST(TrivialExtension, Examples) {
    const auto T = trivial_extension(zmod(2), 1);
    EXPECT_EQ(T.order(), 4u);
    EXPECT_EQ(T.mul(1, 1), T.zero());  // (0,1)^2
    EXPECT_TRUE(verify_isomorphism({T, poly_quot(zmod(2), 2), identity_map(4)}));
    // J(T(R, R^k)) = J(R) x R^k.
    for (std::uint32_t k : {1u, 2u}) {
        const auto E = trivial_extension(zmod(4), k);
        std::vector<Elem> expected;
        for (Elem a = 0; a < E.order(); ++a) {
            const Elem r = a / (E.order() / 4);
            if (r % 2 == 0) expected.push_back(a);
        }
        EXPECT_EQ(oracle::radical(E), expected);
        EXPECT_EQ(jacobson_radical(E).members(), expected);
    }
    EXPECT_THROW(trivial_extension(zmod(2), 0), ConstructionError);
}

TEST(Groups, CyclicAndProducts) {
    EXPECT_TRUE(cyclic_group(4).is_two_group());
    EXPECT_FALSE(cyclic_group(3).is_two_group());
    EXPECT_TRUE(cyclic_group(1).is_two_group());
    const auto V = group_product(cyclic_group(2), cyclic_group(2));
    EXPECT_EQ(V.order, 4u);
    for (std::uint32_t g = 0; g < V.order; ++g) EXPECT_EQ(V.op(g, g), V.identity);
    EXPECT_EQ(V.exponent(), 2u);
    EXPECT_EQ(cyclic_group(4).exponent(), 4u);
    EXPECT_TRUE(validate_group(group_product(cyclic_group(3), cyclic_group(2))).empty());
}

TEST(GroupRing, Augmentation) {
    const auto gr = group_ring(zmod(2), cyclic_group(2));
    const auto rep = verify_hom(gr.augmentation);
    EXPECT_TRUE(rep.ok());
    EXPECT_TRUE(rep.surjective);
    for (std::uint32_t g = 0; g < 2; ++g) EXPECT_EQ(gr.augmentation(gr.basis(g)), gr.augmentation.target.one());
    EXPECT_EQ(gr.augmentation_ideal.size(), 2u);
    EXPECT_TRUE(gr.augmentation_ideal == ideal_closure(gr.ring, {gr.ring.sub(gr.ring.one(), gr.basis(1))}));
}

TEST(GroupRing, AugmentationIdealGeneratedByOneMinusG) {
    for (const auto& [R, G] : {std::pair{zmod(2), cyclic_group(4)}, {zmod(3), cyclic_group(2)},
                               {zmod(2), group_product(cyclic_group(2), cyclic_group(2))}, {zmod(4), cyclic_group(2)}}) {
        const auto gr = group_ring(R, G);
        std::vector<Elem> gens;
        for (std::uint32_t g = 0; g < G.order; ++g) {
            EXPECT_EQ(gr.augmentation(gr.basis(g)), R.one());
            gens.push_back(gr.ring.sub(gr.ring.one(), gr.basis(g)));
        }
        EXPECT_TRUE(is_two_sided_ideal(gr.ring, gr.augmentation_ideal).holds);
        EXPECT_TRUE(ideal_closure(gr.ring, gens) == gr.augmentation_ideal) << gr.ring.label();
        EXPECT_EQ(gr.augmentation_ideal.size() * R.order(), gr.ring.order());
    }
}

TEST(GroupRing, SmallIdentifications) {
    // F2[C2] = F2[x]/<x^2> via g -> 1 + x; coefficients (r_e, r_g) and (c_0, c_1).
    const auto gr = group_ring(zmod(2), cyclic_group(2));
    std::vector<Elem> map(4);
    for (Elem re = 0; re < 2; ++re)
        for (Elem rg = 0; rg < 2; ++rg) map[re * 2 + rg] = ((re + rg) % 2) * 2 + rg;
    EXPECT_TRUE(verify_isomorphism({gr.ring, poly_quot(zmod(2), 2), map}));
    EXPECT_TRUE(group_ring(zmod(2), cyclic_group(1)).ring.tables_equal(zmod(2)));
}

TEST(PolyQuot, Examples) {
    EXPECT_TRUE(poly_quot(zmod(4), 1).tables_equal(zmod(4)));
    const auto P = poly_quot(zmod(2), 2);
    EXPECT_EQ(P.mul(1, 1), P.zero());  // x * x
    const auto P3 = poly_quot(zmod(2), 3);
    EXPECT_EQ(P3.mul(encode({0, 1, 0}, 2), encode({0, 1, 0}, 2)), encode({0, 0, 1}, 2));
    EXPECT_EQ(P3.mul(encode({0, 1, 0}, 2), encode({0, 0, 1}, 2)), P3.zero());
}

TEST(SkewPolyQuot, FrobeniusTwist) {
    const auto F4 = galois_field(2, 2);
    const auto fr = frobenius(F4);
    for (Elem a = 0; a < 4; ++a) EXPECT_EQ(fr.map[a], F4.mul(a, a));
    EXPECT_TRUE(verify_hom({F4, F4, fr.map}).ok());
    const auto S = skew_poly_quot(F4, 2, fr);
    const Elem w = 2, w2 = F4.mul(w, w);
    const Elem x = encode({0, 1}, 4);
    // x * w = w^2 * x, while w * x keeps w.
    EXPECT_EQ(S.mul(x, encode({w, 0}, 4)), encode({0, w2}, 4));
    EXPECT_EQ(S.mul(encode({w, 0}, 4), x), encode({0, w}, 4));
    EXPECT_NE(S.mul(x, encode({w, 0}, 4)), S.mul(encode({w, 0}, 4), x));
}

TEST(SkewPolyQuot, InvalidEndomorphismRejected) {
    const auto Z4 = zmod(4);
    EXPECT_THROW(make_endomorphism(Z4, {0, 3, 2, 1}, "neg"), ConstructionError);  // 1 -> 3
    EXPECT_THROW(make_endomorphism(Z4, {0, 1}, "short"), std::exception);
}

TEST(Families, Orders) {
    EXPECT_EQ(family_Tnm(2, 2, zmod(2)).order(), 8u);
    EXPECT_EQ(family_Snm(2, 2, zmod(2)).order(), 16u);
    EXPECT_EQ(family_Un(4, zmod(2)).order(), 64u);
    EXPECT_EQ(family_Anm(2, 3, zmod(2)).order(), 16u);
    EXPECT_EQ(family_Bnm(3, 2, zmod(2)).order(), 64u);
    EXPECT_EQ(family_Un(3, zmod(4)).order(), 256u);
    EXPECT_THROW(family_Un(1, zmod(2)), ConstructionError);
    EXPECT_THROW(family_Anm(1, 2, zmod(2)), ConstructionError);
}

TEST(Families, BnmRelationXYIsZero) {
    // Coordinates of B_{2,2}: y^i x^j at i*2 + j, big-endian over four binary digits.
    const auto B = family_Bnm(2, 2, zmod(2));
    auto mono = [](std::uint32_t i, std::uint32_t j) { return Elem(1u << (3 - (i * 2 + j))); };
    EXPECT_EQ(B.mul(mono(1, 0), mono(0, 1)), mono(1, 1));  // y * x = yx
    EXPECT_EQ(B.mul(mono(0, 1), mono(1, 0)), B.zero());    // x * y = 0
    EXPECT_EQ(B.mul(mono(0, 1), mono(0, 1)), B.zero());    // x^2 = 0
}

TEST(Families, AnmIsCommutativeWithXYZero) {
    const auto A = family_Anm(3, 2, zmod(2));
    for (Elem a = 0; a < A.order(); ++a)
        for (Elem b = 0; b < A.order(); ++b) ASSERT_EQ(A.mul(a, b), A.mul(b, a));
    // Coordinates (1, x, x^2, y).
    EXPECT_EQ(A.mul(encode({0, 1, 0, 0}, 2), encode({0, 0, 0, 1}, 2)), A.zero());
    EXPECT_EQ(A.mul(encode({0, 1, 0, 0}, 2), encode({0, 1, 0, 0}, 2)), encode({0, 0, 1, 0}, 2));
}

TEST(Families, LabelsRebuildTheSameTables) {
    for (const auto& R : {family_Tnm(2, 3, zmod(2)), family_Snm(3, 2, zmod(2)), family_Un(3, zmod(2)),
                          family_Anm(2, 2, zmod(3)), family_Bnm(2, 2, zmod(2)), formal_Ks(zmod(4), 2),
                          trivial_extension(zmod(2), 2)})
        EXPECT_TRUE(eval_expr(R.label()).tables_equal(R)) << R.label();
}

TEST(Corner, Examples) {
    const auto M = matrix_ring(2, zmod(2));
    EXPECT_TRUE(corner_ring(M, M.one()).tables_equal(M));
    const Elem e11 = encode({1, 0, 0, 0}, 2);
    const auto C = corner_ring(M, e11);
    EXPECT_EQ(C.order(), 2u);
    EXPECT_TRUE(oracle::find_isomorphism(C, zmod(2)).has_value());
    EXPECT_THROW(corner_ring(M, encode({1, 1, 1, 1}, 2)), ConstructionError);  // not idempotent
    EXPECT_THROW(corner_ring(M, M.zero()), ConstructionError);
}

TEST(Quotient, Examples) {
    const auto Z4 = zmod(4);
    const auto q = quotient_ring(Z4, ElementSubset(4, {0, 2}));
    EXPECT_EQ(q.ring.order(), 2u);
    EXPECT_TRUE(q.ring.tables_equal(zmod(2)));
    EXPECT_EQ(verify_hom(q.projection).kernel.members(), (std::vector<Elem>{0, 2}));
    EXPECT_TRUE(quotient_ring(Z4, ElementSubset(4, {0})).ring.tables_equal(Z4));
    EXPECT_THROW(quotient_ring(Z4, ElementSubset(4, {0, 1})), ConstructionError);

    const auto T = upper_triangular(2, zmod(2));
    const auto strict = ElementSubset(8, {0, encode({0, 1, 0}, 2)});
    const auto Q = quotient_ring(T, strict).ring;
    EXPECT_TRUE(oracle::find_isomorphism(Q, direct_product({zmod(2), zmod(2)})).has_value());
}
