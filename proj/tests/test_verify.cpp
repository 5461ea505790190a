#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <set>

#include <finring.hpp>

#include "oracle.hpp"

using namespace finring;

namespace {

std::vector<CorpusEntry> corpus_of(std::initializer_list<std::pair<const char*, const char*>> items) {
    std::vector<CorpusEntry> out;
    for (auto [id, expr] : items) out.push_back(CorpusEntry{id, expr, {}, {}, std::nullopt});
    return out;
}

/// The full default run is shared by several tests.
const SuiteReport& default_report() {
    static const SuiteReport rep = run_all(default_corpus(), 1);
    return rep;
}

/// Z/4 with 0 * 0 = 1: zero becomes a self-inverse "unit".
FiniteRing corrupted_z4() {
    const auto Z4 = zmod(4);
    std::vector<Elem> add(16), mul(16);
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b) {
            add[a * 4 + b] = Z4.add(a, b);
            mul[a * 4 + b] = Z4.mul(a, b);
        }
    mul[0] = 1;
    return FiniteRing::from_tables("corrupt", 4, add, mul, 0, 1);
}

}  // namespace

TEST(Corpus, ShapeAndOrders) {
    const auto corpus = default_corpus();
    EXPECT_GE(corpus.size(), 25u);
    std::set<std::string> ids;
    std::uint64_t lo = UINT64_MAX, hi = 0;
    for (const auto& e : corpus) {
        EXPECT_TRUE(ids.insert(e.id).second) << e.id;
        const auto ord = expr_order(parse_expr(e.expr));
        EXPECT_LE(ord, max_order()) << e.id;
        lo = std::min(lo, ord);
        hi = std::max(hi, ord);
        EXPECT_TRUE(e.expected.count(Property::unituc)) << e.id;
        for (const auto& [p, want] : e.expected) EXPECT_TRUE(e.provenance.count(p)) << e.id;
    }
    EXPECT_EQ(lo, 2u);
    EXPECT_LE(hi, 4096u);
}

TEST(Corpus, ExpectationsAreConsistent) {
    for (const auto& e : default_corpus()) {
        const auto R = eval_expr(e.expr);
        for (const auto& [p, want] : e.expected) {
            const auto& v = has_property(R, p);
            EXPECT_EQ(v.holds, want) << e.id << " " << property_name(p);
            if (!v.holds) {
                ASSERT_TRUE(v.witness) << e.id;
                EXPECT_TRUE(replay_witness(R, p, *v.witness)) << e.id;
            }
        }
        if (e.expected.at(Property::unituc)) {
            const auto J = oracle::radical(R);
            EXPECT_TRUE(std::binary_search(J.begin(), J.end(), R.integer(2))) << e.id;
        }
    }
}

TEST(RunTheorem, CharacterizationPassesEverywhere) {
    const auto res = run_theorem("THM-CHAR", default_corpus());
    EXPECT_EQ(res.size(), default_corpus().size());
    for (const auto& r : res) {
        EXPECT_TRUE(r.passed) << r.ring_id;
        EXPECT_EQ(r.theorem_id, "THM-CHAR");
    }
}

TEST(RunTheorem, MatrixExampleStoresUnitPair) {
    const auto res = run_theorem("EX-MAT", default_corpus());
    ASSERT_EQ(res.size(), 2u);
    for (const auto& r : res) {
        ASSERT_TRUE(r.passed) << r.ring_id;
        const auto R = eval_expr(r.ring_id == "M2Z2" ? "M(2,Z(2))" : "M(2,Z(4))");
        const Elem u = r.evidence.at("unit_u"), v = r.evidence.at("unit_v");
        EXPECT_TRUE(oracle::is_unit(R, u));
        EXPECT_TRUE(oracle::is_unit(R, v));
        EXPECT_EQ(R.add(u, v), R.one());
    }
}

TEST(RunTheorem, CorruptedFixtureFailsWithReplayableWitness) {
    std::vector<CorpusEntry> corpus = corpus_of({{"Z4", "Z(4)"}});
    corpus.push_back(CorpusEntry{"corrupt", "", {}, {}, corrupted_z4()});
    const auto res = run_theorem("LEM-CONJ", corpus);
    ASSERT_EQ(res.size(), 2u);
    EXPECT_TRUE(res[0].passed);
    ASSERT_FALSE(res[1].passed);
    ASSERT_TRUE(res[1].witness);
    // Replay with raw table arithmetic.
    const auto F = corrupted_z4();
    const Elem e = res[1].witness->at("e"), f = res[1].witness->at("f"), u = res[1].witness->at("u");
    EXPECT_EQ(F.mul(e, e), e);
    EXPECT_EQ(F.mul(f, f), f);
    EXPECT_EQ(F.sub(e, f), u);
    const Elem ui = oracle::inverse(F, u);
    ASSERT_NE(ui, F.order());
    EXPECT_NE(F.mul(F.mul(ui, F.sub(F.one(), e)), u), f);
}

TEST(RunTheorem, UnknownIdThrows) {
    EXPECT_THROW(run_theorem("NOPE", default_corpus()), std::invalid_argument);
    EXPECT_THROW(run_suite(default_corpus(), {"THM-CHAR", "NOPE"}, 1), std::invalid_argument);
}

TEST(RunAll, EmptyCorpus) {
    const auto rep = run_all({}, 1);
    EXPECT_EQ(rep.failures, 0u);
    EXPECT_TRUE(rep.suite.empty());
    EXPECT_EQ(to_json(rep)["failures"], 0);
}

TEST(RunAll, SingleRingRunsOnlyApplicableTheorems) {
    const auto rep = run_all(corpus_of({{"Z2", "Z(2)"}}), 1);
    EXPECT_EQ(rep.failures, 0u);
    std::map<std::string, std::size_t> counts;
    for (const auto& [id, results] : rep.suite) counts[id] = results.size();
    EXPECT_EQ(counts.at("EX-MAT"), 0u);
    EXPECT_EQ(counts.at("THM-GRP"), 0u);
    EXPECT_EQ(counts.at("THM-MOR-PEIRCE"), 0u);
    EXPECT_EQ(counts.at("LEM-CONJ"), 1u);
    EXPECT_EQ(counts.at("THM-CHAR"), 1u);
}

TEST(RunAll, DefaultCorpusHasNoFailures) {
    const auto& rep = default_report();
    EXPECT_EQ(rep.failures, 0u);
    for (const auto& [id, results] : rep.suite)
        for (const auto& r : results) EXPECT_TRUE(r.passed) << id << " " << r.ring_id << " " << r.witness->dump();
    const auto ids = theorem_ids();
    ASSERT_EQ(rep.suite.size(), ids.size() + 1);
    for (std::size_t i = 0; i < ids.size(); ++i) EXPECT_EQ(rep.suite[i].first, ids[i]);
    EXPECT_EQ(rep.suite.back().first, kExpectationsId);
}

TEST(RunAll, DeterministicAcrossJobCounts) {
    const auto two = run_all(default_corpus(), 2);
    EXPECT_EQ(to_json(default_report(), false), to_json(two, false));
}

TEST(RunAll, CoverageInvariants) {
    std::map<std::string, std::set<std::string>> rings_per_theorem, theorems_per_ring;
    for (const auto& [id, results] : default_report().suite) {
        if (id == kExpectationsId) continue;
        for (const auto& r : results) {
            if (r.skipped) continue;
            rings_per_theorem[id].insert(r.corpus_ring);
            theorems_per_ring[r.corpus_ring].insert(id);
        }
    }
    for (const auto& id : theorem_ids()) EXPECT_GE(rings_per_theorem[id].size(), 2u) << id;
    for (const auto& e : default_corpus()) EXPECT_GE(theorems_per_ring[e.id].size(), 3u) << e.id;
}

TEST(RunAll, JsonSchema) {
    const auto j = to_json(run_all(corpus_of({{"Z2", "Z(2)"}, {"M2Z2", "M(2,Z(2))"}}), 1));
    ASSERT_TRUE(j.at("suite").is_array());
    EXPECT_EQ(j.at("failures"), 0);
    for (const auto& t : j["suite"]) {
        EXPECT_TRUE(t.at("theorem").is_string());
        for (const auto& r : t.at("results")) {
            EXPECT_TRUE(r.at("ring").is_string());
            EXPECT_TRUE(r.at("passed").is_boolean());
            EXPECT_TRUE(r.contains("witness"));
            EXPECT_TRUE(r.at("ms").is_number_integer());
        }
    }
}

TEST(CorpusFile, LoadsAndRejects) {
    const auto corpus = corpus_from_json(nlohmann::json::parse(
        R"j([{"id":"a","expr":"Z(4)","expected":{"unituc":true},"provenance":{"unituc":"local, residue field F2"}},
            {"id":"b","expr":"Z(3)"}])j"));
    ASSERT_EQ(corpus.size(), 2u);
    EXPECT_TRUE(corpus[0].expected.at(Property::unituc));
    EXPECT_EQ(corpus[0].provenance.at(Property::unituc), "local, residue field F2");
    EXPECT_TRUE(corpus[1].expected.empty());
    EXPECT_EQ(run_all(corpus, 1).failures, 0u);

    EXPECT_THROW(corpus_from_json(nlohmann::json::object()), std::invalid_argument);
    EXPECT_THROW(corpus_from_json(nlohmann::json::parse(R"j([{"id":"a","expr":"Z(2)","expected":{"bogus":true}}])j")),
                 std::invalid_argument);
    EXPECT_THROW(load_corpus("/nonexistent/corpus.json"), std::invalid_argument);

    const std::string path = ::testing::TempDir() + "corpus.json";
    std::ofstream(path) << R"j([{"id":"z","expr":"Z(2)","expected":{"unituc":false}}])j";
    const auto rep = run_all(load_corpus(path), 1);
    EXPECT_EQ(rep.failures, 1u);
}
