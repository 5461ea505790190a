#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include <finring.hpp>

#include "oracle.hpp"

using namespace finring;

namespace {

std::vector<Elem> tables_with(const FiniteRing& R, std::span<const Elem> t, Elem a, Elem b, Elem v) {
    std::vector<Elem> out(t.begin(), t.end());
    out[std::size_t(a) * R.order() + b] = v;
    return out;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("finring_test_" + name);
}

}  // namespace

TEST(Arithmetic, ZmodLookups) {
    const auto Z4 = zmod(4);
    EXPECT_EQ(ring_mul(Z4, 3, 3), 1u);
    EXPECT_EQ(ring_pow(Z4, 2, 2), 0u);
    EXPECT_EQ(ring_pow(Z4, 3, 0), Z4.one());
    EXPECT_EQ(ring_add(Z4, 3, 2), 1u);
    for (Elem a = 0; a < Z4.order(); ++a) EXPECT_EQ(ring_add(Z4, a, ring_neg(Z4, a)), Z4.zero());
}

TEST(Arithmetic, IndexOutOfRangeThrows) {
    const auto Z4 = zmod(4);
    EXPECT_THROW(ring_add(Z4, 4, 0), std::out_of_range);
    EXPECT_THROW(ring_mul(Z4, 0, 9), std::out_of_range);
    EXPECT_THROW(ring_neg(Z4, 4), std::out_of_range);
    EXPECT_THROW(ring_pow(Z4, 7, 1), std::out_of_range);
}

TEST(Arithmetic, NegationTableIsAdditiveInverse) {
    for (const auto& R : {zmod(6), galois_field(2, 2), matrix_ring(2, zmod(2)), formal_Ks(zmod(4), 2)})
        for (Elem a = 0; a < R.order(); ++a) EXPECT_EQ(R.add(a, R.neg(a)), R.zero()) << R.label();
}

TEST(Axioms, ModularArithmeticPasses) {
    const auto report = validate_ring_axioms(zmod(4));
    EXPECT_TRUE(report.ok());
    EXPECT_FALSE(report.sampled);
}

TEST(Axioms, CorruptedProductIsDetected) {
    const auto Z4 = zmod(4);
    const auto bad = FiniteRing::from_tables("bad", 4, std::vector<Elem>(Z4.add_table().begin(), Z4.add_table().end()),
                                             tables_with(Z4, Z4.mul_table(), 2, 2, 1), 0, 1);
    const auto report = validate_ring_axioms(bad);
    ASSERT_FALSE(report.ok());
    bool assoc_or_dist = false;
    for (const auto& v : report.violations) {
        if (v.axiom.find("associativity") == std::string::npos && v.axiom.find("distributivity") == std::string::npos)
            continue;
        assoc_or_dist = true;
        // The witness triple really breaks the named law.
        const auto [a, b, c] = v.witness;
        if (v.axiom == "multiplicative associativity") {
            EXPECT_NE(bad.mul(bad.mul(a, b), c), bad.mul(a, bad.mul(b, c)));
        } else if (v.axiom == "left distributivity") {
            EXPECT_NE(bad.mul(a, bad.add(b, c)), bad.add(bad.mul(a, b), bad.mul(a, c)));
        } else if (v.axiom == "right distributivity") {
            EXPECT_NE(bad.mul(bad.add(a, b), c), bad.add(bad.mul(a, c), bad.mul(b, c)));
        }
    }
    EXPECT_TRUE(assoc_or_dist) << describe(report);
    EXPECT_THROW(checked(bad), ConstructionError);
}

TEST(Axioms, OneEqualsZeroIsRejected) {
    const auto report = validate_ring_axioms(FiniteRing::from_tables("trivial", 1, {0}, {0}, 0, 0));
    ASSERT_FALSE(report.ok());
    EXPECT_EQ(report.violations.front().axiom, "one != zero");
}

TEST(Axioms, LargeRingsAreSampled) {
    const auto R = upper_triangular(3, zmod(4));
    ASSERT_EQ(R.order(), 4096u);
    const auto report = validate_ring_axioms(R);
    EXPECT_TRUE(report.ok());
    EXPECT_TRUE(report.sampled);
}

TEST(Axioms, SampledModeCatchesDenseCorruption) {
    // Corrupting a whole row of the product is visible to 10,000 random triples.
    const auto R = upper_triangular(3, zmod(4));
    std::vector<Elem> mul(R.mul_table().begin(), R.mul_table().end());
    const Elem victim = 5;
    for (Elem b = 0; b < R.order(); ++b) mul[std::size_t(victim) * R.order() + b] = R.one();
    const auto bad = FiniteRing::from_tables("bad", R.order(), std::vector<Elem>(R.add_table().begin(), R.add_table().end()),
                                             std::move(mul), R.zero(), R.one());
    EXPECT_FALSE(validate_ring_axioms(bad).ok());
}

TEST(Axioms, MalformedTablesThrow) {
    EXPECT_THROW(FiniteRing::from_tables("x", 2, {0, 1, 1}, {0, 0, 0, 1}, 0, 1), ConstructionError);
    EXPECT_THROW(FiniteRing::from_tables("x", 2, {0, 1, 1, 2}, {0, 0, 0, 1}, 0, 1), ConstructionError);
    EXPECT_THROW(FiniteRing::from_tables("x", 2, {0, 1, 1, 0}, {0, 0, 0, 1}, 0, 5), ConstructionError);
}

TEST(Hom, IdentityIsBijective) {
    const auto Z4 = zmod(4);
    const auto r = verify_hom({Z4, Z4, {0, 1, 2, 3}});
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.bijective());
    EXPECT_TRUE(verify_isomorphism({Z4, Z4, {0, 1, 2, 3}}));
}

TEST(Hom, ReductionModTwo) {
    const auto Z4 = zmod(4), Z2 = zmod(2);
    const RingHom h{Z4, Z2, {0, 1, 0, 1}};
    const auto r = verify_hom(h);
    ASSERT_TRUE(r.ok());
    EXPECT_TRUE(r.surjective);
    EXPECT_FALSE(r.injective);
    EXPECT_EQ(r.kernel.members(), (std::vector<Elem>{0, 2}));
    // J(Z4) from the nil-ideal oracle.
    EXPECT_EQ(oracle::radical(Z4), (std::vector<Elem>{0, 2}));
    EXPECT_TRUE(r.kernel_in_radical);
    EXPECT_FALSE(verify_isomorphism(h));
}

TEST(Hom, OneMustMapToOne) {
    const auto r = verify_hom({zmod(2), zmod(4), {0, 2}});
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(*r.violation, "map(one)=one");
}

TEST(Hom, MultiplicativityViolationHasWitness) {
    // GF(4) -> GF(4) fixing F2 and sending w to 0 is additive but not multiplicative.
    const auto F4 = galois_field(2, 2);
    const RingHom h{F4, F4, {0, 1, 0, 1}};
    const auto r = verify_hom(h);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(*r.violation, "map(ab)=map(a)map(b)");
    const auto [a, b] = r.witness;
    EXPECT_NE(h.map[F4.mul(a, b)], F4.mul(h.map[a], h.map[b]));
}

TEST(Hom, DimensionMismatchThrows) {
    EXPECT_THROW(verify_hom({zmod(4), zmod(2), {0, 1}}), std::invalid_argument);
    EXPECT_THROW(verify_hom({zmod(2), zmod(2), {0, 7}}), std::invalid_argument);
}

TEST(Hom, IsomorphismNeedsEqualOrders) {
    EXPECT_FALSE(verify_isomorphism({zmod(4), zmod(2), {0, 1, 0, 1}}));
}

TEST(Hom, CrtIsomorphism) {
    const auto P = direct_product({zmod(2), zmod(3)});
    const auto map = oracle::crt_map(2, 3);
    EXPECT_TRUE(oracle::isomorphism(P, zmod(6), map));
    EXPECT_TRUE(verify_isomorphism({P, zmod(6), map}));
}

TEST(Subset, CanonicalOrderWithoutDuplicates) {
    const ElementSubset s(8, {5, 1, 5, 3});
    EXPECT_EQ(s.members(), (std::vector<Elem>{1, 3, 5}));
    EXPECT_TRUE(s.contains(3));
    EXPECT_FALSE(s.contains(2));
    EXPECT_FALSE(s.contains(100));
    EXPECT_THROW(ElementSubset(4, {4}), std::out_of_range);
}

TEST(Render, DistinctAndTotal) {
    for (const auto& R : {zmod(4), galois_field(2, 2), matrix_ring(2, zmod(2)), trivial_extension(zmod(2), 1),
                          poly_quot(zmod(3), 2), group_ring(zmod(2), cyclic_group(3)).ring}) {
        std::set<std::string> seen;
        for (Elem a = 0; a < R.order(); ++a) seen.insert(R.render(a));
        EXPECT_EQ(seen.size(), R.order()) << R.label();
    }
}

TEST(Cap, OverrideFromEnvironment) {
    ASSERT_EQ(setenv("FINRING_MAX_ORDER", "100", 1), 0);
    EXPECT_EQ(max_order(), 100u);
    EXPECT_THROW(matrix_ring(2, zmod(4)), CapExceeded);
    try {
        matrix_ring(2, zmod(4));
    } catch (const CapExceeded& e) {
        EXPECT_EQ(e.order(), 256u);
        EXPECT_EQ(e.cap(), 100u);
    }
    unsetenv("FINRING_MAX_ORDER");
    EXPECT_EQ(max_order(), kDefaultMaxOrder);
    EXPECT_EQ(matrix_ring(2, zmod(4)).order(), 256u);
}

TEST(Cap, DefaultRejectsHugeRingsBeforeBuilding) {
    EXPECT_THROW(matrix_ring(3, zmod(4)), CapExceeded);  // 4^9
    EXPECT_THROW(direct_product({zmod(256), zmod(256), zmod(2)}), CapExceeded);
}

class CacheRoundTrip : public ::testing::TestWithParam<std::string> {};

TEST_P(CacheRoundTrip, BothFormatsReloadBitIdentical) {
    const auto R = eval_expr(GetParam());
    const auto json_path = temp_path("rt.json"), bin_path = temp_path("rt.bin");
    save_ring(R, json_path.string(), CacheFormat::json);
    save_ring(R, bin_path.string(), CacheFormat::binary);
    const auto from_json = load_ring(json_path.string());
    const auto from_bin = load_ring(bin_path.string());
    EXPECT_TRUE(from_json.tables_equal(R));
    EXPECT_TRUE(from_bin.tables_equal(R));
    EXPECT_TRUE(from_json.tables_equal(from_bin));
    EXPECT_EQ(from_json.label(), R.label());
    // The binary layout is exactly header + two u32 tables.
    EXPECT_EQ(std::filesystem::file_size(bin_path), 16 + 8ull * R.order() * R.order());
    std::filesystem::remove(json_path);
    std::filesystem::remove(bin_path);
}

INSTANTIATE_TEST_SUITE_P(Representative, CacheRoundTrip,
                         ::testing::Values("Z(4)", "GF(2,2)", "M(2,Z(2))", "T(3,Z(2))", "GR(Z(2),C(4))",
                                           "Ks(Z(4),2)"));

TEST(Cache, BinaryHeaderIsLittleEndian) {
    const auto bytes = ring_to_binary(zmod(3));
    ASSERT_EQ(bytes.substr(0, 4), "FRC1");
    EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 3);
    EXPECT_EQ(bytes[5], 0);
    EXPECT_EQ(static_cast<unsigned char>(bytes[12]), 1);  // one
}

TEST(Cache, JsonShape) {
    const auto j = ring_to_json(zmod(2));
    EXPECT_EQ(j["version"], 1);
    EXPECT_EQ(j["order"], 2);
    EXPECT_EQ(j["add"], nlohmann::json::parse("[[0,1],[1,0]]"));
    EXPECT_EQ(j["mul"], nlohmann::json::parse("[[0,0],[0,1]]"));
}

TEST(Cache, MalformedInputsAreRejected) {
    EXPECT_THROW(ring_from_binary("FRC2xxxxxxxxxxxx"), FormatError);
    auto truncated = ring_to_binary(zmod(3));
    truncated.pop_back();
    EXPECT_THROW(ring_from_binary(truncated), FormatError);
    auto j = ring_to_json(zmod(2));
    j["mul"][1][1] = 0;  // one no longer an identity
    EXPECT_THROW(ring_from_json(j), ConstructionError);
    j = ring_to_json(zmod(2));
    j["add"].erase(1);
    EXPECT_THROW(ring_from_json(j), FormatError);
    const auto path = temp_path("garbage.json");
    std::ofstream(path) << "{not json";
    EXPECT_THROW(load_ring(path.string()), FormatError);
    std::filesystem::remove(path);
    EXPECT_THROW(load_ring("/nonexistent/finring.json"), FormatError);
}
