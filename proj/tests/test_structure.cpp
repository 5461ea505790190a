#include <gtest/gtest.h>

#include <finring.hpp>

#include "oracle.hpp"

using namespace finring;

namespace {

Elem encode(std::initializer_list<Elem> coords, std::uint32_t radix) {
    Elem idx = 0;
    for (Elem c : coords) idx = idx * radix + c;
    return idx;
}

const std::vector<std::string>& small_rings() {
    static const std::vector<std::string> exprs = {
        "Z(2)",          "Z(4)",           "Z(6)",          "Z(8)",         "Z(9)",
        "GF(2,2)",       "Prod(Z(2),Z(4))", "M(2,Z(2))",    "T(2,Z(2))",    "T(2,Z(3))",
        "T(3,Z(2))",     "Sn(3,Z(2))",     "Ks(Z(2),0)",    "Ks(Z(4),2)",   "TrivExt(Z(4),1)",
        "GR(Z(2),C(3))", "GR(Z(3),C(2))",  "PolyQuot(Z(2),3)", "Un(4,Z(2))", "Bnm(2,2,Z(2))",
        "SkewPolyQuot(GF(2,2),2,frobenius)", "Corner(M(2,Z(2)),8)",
    };
    return exprs;
}

}  // namespace

TEST(Idempotents, Examples) {
    EXPECT_EQ(idempotents(zmod(4)).members(), (std::vector<Elem>{0, 1}));
    EXPECT_EQ(idempotents(direct_product({zmod(2), zmod(2)})).size(), 4u);
    EXPECT_EQ(idempotents(matrix_ring(2, zmod(2))).size(), oracle::idempotent_2x2_count(2));
    EXPECT_EQ(oracle::idempotent_2x2_count(2), 8u);
}

TEST(Units, Examples) {
    const auto Z4 = zmod(4);
    EXPECT_EQ(units(Z4).units.members(), (std::vector<Elem>{1, 3}));
    EXPECT_EQ(inverse(Z4, 3), 3u);
    EXPECT_THROW(inverse(Z4, 2), std::invalid_argument);
    EXPECT_EQ(units(matrix_ring(2, zmod(2))).units.size(), 6u);
    EXPECT_EQ(units(matrix_ring(2, zmod(3))).units.size(), oracle::gl2_count(3));
}

TEST(Nilpotents, Examples) {
    EXPECT_EQ(nilpotents(zmod(4)).members(), (std::vector<Elem>{0, 2}));
    EXPECT_EQ(nilpotents(direct_product({zmod(2), zmod(2)})).members(), (std::vector<Elem>{0}));
    EXPECT_EQ(nilpotents(upper_triangular(2, zmod(2))).members(), (std::vector<Elem>{0, encode({0, 1, 0}, 2)}));
}

TEST(Radical, Examples) {
    EXPECT_EQ(jacobson_radical(zmod(4)).members(), (std::vector<Elem>{0, 2}));
    EXPECT_EQ(jacobson_radical(matrix_ring(2, zmod(2))).members(), (std::vector<Elem>{0}));
    EXPECT_EQ(jacobson_radical(trivial_extension(zmod(2), 1)).members(), (std::vector<Elem>{0, 1}));
}

TEST(Center, Examples) {
    for (const auto& R : {zmod(6), galois_field(2, 2), poly_quot(zmod(2), 3)})
        EXPECT_EQ(center(R).size(), R.order());
    const Elem I2 = encode({1, 0, 0, 1}, 2);
    EXPECT_EQ(center(matrix_ring(2, zmod(2))).members(), (std::vector<Elem>{0, I2}));
    EXPECT_EQ(center(upper_triangular(2, zmod(2))).members(), (std::vector<Elem>{0, encode({1, 0, 1}, 2)}));
}

TEST(IdealClosure, Examples) {
    const auto Z4 = zmod(4);
    EXPECT_EQ(ideal_closure(Z4, {2}).members(), (std::vector<Elem>{0, 2}));
    EXPECT_EQ(ideal_closure(Z4, {}).members(), (std::vector<Elem>{0}));
    EXPECT_EQ(ideal_closure(Z4, {3}).size(), 4u);
    const auto gr = group_ring(zmod(2), cyclic_group(2));
    const auto delta = ideal_closure(gr.ring, {gr.ring.sub(gr.ring.one(), gr.basis(1))});
    EXPECT_EQ(delta.size(), 2u);
    EXPECT_TRUE(delta == verify_hom(gr.augmentation).kernel);
}

TEST(Predicates, Examples) {
    EXPECT_TRUE(is_boolean(direct_product({zmod(2), zmod(2)})).holds);
    const auto nb = is_boolean(zmod(3));
    ASSERT_FALSE(nb.holds);
    EXPECT_EQ(nb.witness->at("x"), 2u);
    EXPECT_TRUE(is_local(zmod(4)).holds);
    EXPECT_FALSE(is_local(zmod(6)).holds);
    EXPECT_TRUE(is_reduced(zmod(6)).holds);
    EXPECT_FALSE(is_reduced(zmod(4)).holds);

    const auto M = matrix_ring(2, zmod(2));
    const auto ab = is_abelian(M);
    ASSERT_FALSE(ab.holds);
    const Elem e = ab.witness->at("e"), r = ab.witness->at("r");
    EXPECT_EQ(M.mul(e, e), e);
    EXPECT_NE(M.mul(e, r), M.mul(r, e));
}

TEST(Conjugacy, CommutativeRingsHaveSingletonClasses) {
    for (const auto& R : {zmod(6), direct_product({zmod(2), zmod(2), zmod(2)}), galois_field(2, 2)}) {
        for (Elem e : idempotents(R))
            for (Elem f : idempotents(R)) EXPECT_EQ(are_conjugate(R, e, f).has_value(), e == f);
    }
}

TEST(Conjugacy, MatrixRingOverF2) {
    const auto M = matrix_ring(2, zmod(2));
    const Elem e11 = encode({1, 0, 0, 0}, 2), f = encode({1, 1, 0, 0}, 2);
    const auto u = are_conjugate(M, e11, f);
    ASSERT_TRUE(u.has_value());
    EXPECT_EQ(M.mul(M.mul(inverse(M, *u), f), *u), e11);
    // Least witness: no smaller unit conjugates f to e11.
    for (Elem v : oracle::units(M)) {
        if (v >= *u) break;
        EXPECT_NE(M.mul(M.mul(oracle::inverse(M, v), f), v), e11);
    }
    const auto& classes = idempotent_conjugacy_classes(M);
    ASSERT_EQ(classes.size(), 3u);
    EXPECT_EQ(classes[0], (std::vector<Elem>{0}));
    EXPECT_EQ(classes[1].size(), 6u);
    EXPECT_EQ(classes[2], (std::vector<Elem>{M.one()}));
    EXPECT_EQ(classes, oracle::conjugacy_classes(M));
}

TEST(Conjugacy, ZeroAndOneAreAlone) {
    for (const auto& text : small_rings()) {
        const auto R = eval_expr(text);
        for (Elem f : idempotents(R)) {
            EXPECT_EQ(are_conjugate(R, R.zero(), f).has_value(), f == R.zero()) << text;
            EXPECT_EQ(are_conjugate(R, R.one(), f).has_value(), f == R.one()) << text;
        }
    }
}

TEST(Conjugacy, RejectsNonIdempotents) {
    EXPECT_THROW(are_conjugate(zmod(4), 2, 0), std::invalid_argument);
}

class AgainstOracle : public ::testing::TestWithParam<std::string> {};

TEST_P(AgainstOracle, AllStructureSets) {
    const auto R = eval_expr(GetParam());
    EXPECT_EQ(units(R).units.members(), oracle::units(R));
    for (Elem u : units(R).units) EXPECT_EQ(units(R).inverse[u], oracle::inverse(R, u));
    EXPECT_EQ(idempotents(R).members(), oracle::idempotents(R));
    EXPECT_EQ(nilpotents(R).members(), oracle::nilpotents(R));
    EXPECT_EQ(jacobson_radical(R).members(), oracle::radical(R));
    EXPECT_EQ(center(R).members(), oracle::center(R));
    EXPECT_EQ(idempotent_conjugacy_classes(R), oracle::conjugacy_classes(R));
}

TEST_P(AgainstOracle, RadicalPostConditions) {
    const auto R = eval_expr(GetParam());
    const auto& J = jacobson_radical(R);
    EXPECT_TRUE(is_two_sided_ideal(R, J).holds);
    for (Elem j : J) EXPECT_TRUE(is_unit(R, R.add(R.one(), j)));
    const auto Q = quotient_ring(R, J).ring;
    EXPECT_EQ(jacobson_radical(Q).size(), 1u);
}

TEST_P(AgainstOracle, UnitsFormAGroup) {
    const auto R = eval_expr(GetParam());
    const auto& U = units(R);
    EXPECT_TRUE(U.is_unit(R.one()));
    EXPECT_FALSE(U.is_unit(R.zero()));
    for (Elem a : U.units)
        for (Elem b : U.units) ASSERT_TRUE(U.is_unit(R.mul(a, b)));
}

TEST_P(AgainstOracle, ConjugacyIsAnEquivalenceCompatibleWithComplements) {
    const auto R = eval_expr(GetParam());
    const auto& Id = idempotents(R);
    for (Elem e : Id) {
        EXPECT_TRUE(are_conjugate(R, e, e).has_value());
        for (Elem f : Id) {
            const auto u = are_conjugate(R, e, f);
            EXPECT_EQ(u.has_value(), are_conjugate(R, f, e).has_value());
            EXPECT_EQ(u.has_value(), same_conjugacy_class(R, e, f));
            if (u) {
                const Elem ce = R.sub(R.one(), e), cf = R.sub(R.one(), f);
                EXPECT_EQ(R.mul(R.mul(inverse(R, *u), cf), *u), ce);
            }
        }
    }
    if (Id.size() > 16) return;
    for (Elem e : Id)
        for (Elem f : Id)
            for (Elem g : Id)
                if (same_conjugacy_class(R, e, f) && same_conjugacy_class(R, f, g)) {
                    EXPECT_TRUE(are_conjugate(R, e, g).has_value());
                }
}

TEST_P(AgainstOracle, LocalRingsHaveDivisionQuotients) {
    const auto R = eval_expr(GetParam());
    if (!is_local(R).holds) return;
    const auto Q = quotient_ring(R, jacobson_radical(R)).ring;
    EXPECT_EQ(units(Q).units.size() + 1, Q.order());
}

INSTANTIATE_TEST_SUITE_P(SmallRings, AgainstOracle, ::testing::ValuesIn(small_rings()),
                         [](const auto& info) { return "r" + std::to_string(info.index); });
