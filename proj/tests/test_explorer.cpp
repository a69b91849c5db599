#include <gtest/gtest.h>

#include <algorithm>

#include "josephus/explorer.hpp"
#include "josephus/report_io.hpp"

using namespace josephus;
using namespace josephus::explore;

namespace {
SweepRange range(Count k_min, Count k_max, Count n_min, Count n_max, Count l_min = 1, Count l_max = 1) {
    return {k_min, k_max, n_min, n_max, l_min, l_max, false};
}
}  // namespace

TEST(Verify, Theorem1Clean) {
    const auto rep = verify(Subject::Theorem1, range(1, 6, 1, 300));
    EXPECT_EQ(rep.checked, 6u * 300u);
    EXPECT_TRUE(rep.mismatches.empty());
    EXPECT_TRUE(rep.complete);
}

TEST(Verify, Theorem2CountsSoldiers) {
    const auto rep = verify(Subject::Theorem2, range(1, 4, 1, 60));
    EXPECT_EQ(rep.checked, 4u * (60u * 61u / 2));
    EXPECT_TRUE(rep.mismatches.empty());
}

TEST(Verify, Theorem3PrintedMissesFigureDatum) {
    const auto rep = verify(Subject::Theorem3PaperPrinted, range(4, 4, 13, 13));
    ASSERT_EQ(rep.checked, 1u);
    ASSERT_EQ(rep.mismatches.size(), 1u);
    const auto& m = rep.mismatches.front();
    EXPECT_EQ(m.config, (Case{4, 13, 4, std::nullopt}));
    EXPECT_EQ(m.expected, Value(Count{9}));
    EXPECT_EQ(m.oracle, Value(Count{10}));
}

TEST(Verify, Theorem3ReconciledClean) {
    const auto rep = verify(Subject::Theorem3Reconciled, range(1, 6, 1, 200));
    EXPECT_GT(rep.checked, 0u);
    EXPECT_TRUE(rep.mismatches.empty());
}

TEST(Verify, LemmasClean) {
    EXPECT_TRUE(verify(Subject::Lemma1, range(1, 4, 1, 60, 1, 4)).mismatches.empty());
    const auto l2 = verify(Subject::Lemma2, range(2, 4, 2, 80, 1, 12));
    EXPECT_GT(l2.checked, 0u);
    EXPECT_TRUE(l2.mismatches.empty());
}

TEST(Verify, Lemma1SkipsSmallN) {
    const auto rep = verify(Subject::Lemma1, range(5, 5, 1, 4, 1, 3));
    EXPECT_EQ(rep.checked, 0u);
}

TEST(Verify, OneLifeSetsCompared) {
    const auto printed = verify(Subject::OneLifeSetPaperPrinted, range(4, 4, 13, 13, 3, 3));
    ASSERT_EQ(printed.mismatches.size(), 1u);
    EXPECT_EQ(printed.mismatches[0].expected, Value(std::vector<Label>{0, 2, 4, 5, 7, 9, 10, 12}));
    EXPECT_EQ(printed.mismatches[0].oracle, Value(std::vector<Label>{2, 4, 5, 7, 9, 10, 12}));

    const auto rec = verify(Subject::OneLifeSetReconciled, range(2, 6, 2, 100, 1, 6));
    EXPECT_GT(rec.checked, 0u);
    EXPECT_TRUE(rec.mismatches.empty());
}

TEST(Verify, AbsentSnapshotIsAValue) {
    // (5, 3, 2) never reaches an all-ones round boundary
    const auto rep = verify(Subject::OneLifeSetPaperPrinted, range(3, 3, 5, 5, 2, 2));
    ASSERT_EQ(rep.mismatches.size(), 1u);
    EXPECT_TRUE(std::holds_alternative<std::monostate>(rep.mismatches[0].oracle));
}

TEST(Verify, OpenProblemSubjects) {
    EXPECT_TRUE(verify(Subject::ConstantSurvivor, range(4, 4, 13, 13, 1, 8)).mismatches.empty());
    EXPECT_FALSE(verify(Subject::ConstantSurvivor, range(4, 4, 14, 14, 1, 8)).mismatches.empty());
    const auto kgt = verify(Subject::KGreaterThanN, range(1, 25, 1, 12));
    EXPECT_GT(kgt.checked, 0u);
    EXPECT_TRUE(kgt.mismatches.empty());
    const auto nc = verify(Subject::NonCoprimeSurvey, range(1, 5, 1, 120, 1, 4));
    EXPECT_GT(nc.checked, 0u);
    EXPECT_TRUE(nc.mismatches.empty());
}

TEST(Verify, InvalidRange) {
    EXPECT_THROW(verify(Subject::Theorem1, range(3, 2, 1, 5)), DomainError);
    EXPECT_THROW(verify(Subject::Theorem1, range(0, 2, 1, 5)), DomainError);
}

TEST(Verify, DeterministicAcrossThreadCounts) {
    const auto r = range(1, 8, 1, 150);
    const auto one = verify(Subject::Theorem3PaperPrinted, r, {1});
    const auto many = verify(Subject::Theorem3PaperPrinted, r, {7});
    EXPECT_EQ(io::to_json(one).dump(), io::to_json(many).dump());
    EXPECT_EQ(io::to_csv(one), io::to_csv(many));
    EXPECT_TRUE(std::is_sorted(one.mismatches.begin(), one.mismatches.end(),
                               [](const Mismatch& a, const Mismatch& b) { return a.config < b.config; }));
}

TEST(Verify, MismatchesMonotoneUnderRangeExtension) {
    const auto small = verify(Subject::Theorem3PaperPrinted, range(2, 4, 5, 60));
    const auto big = verify(Subject::Theorem3PaperPrinted, range(1, 6, 1, 120));
    for (const auto& m : small.mismatches)
        EXPECT_NE(std::find(big.mismatches.begin(), big.mismatches.end(), m), big.mismatches.end());
    EXPECT_GE(big.mismatches.size(), small.mismatches.size());
}

TEST(Verify, MismatchesReverifyIndividually) {
    const auto rep = verify(Subject::Theorem3PaperPrinted, range(1, 5, 1, 100));
    ASSERT_FALSE(rep.mismatches.empty());
    for (const auto& m : rep.mismatches) {
        const auto again = verify(Subject::Theorem3PaperPrinted, range(m.config.k, m.config.k, m.config.n, m.config.n));
        ASSERT_EQ(again.mismatches.size(), 1u);
        EXPECT_EQ(again.mismatches[0], m);
        EXPECT_EQ(std::get<Count>(m.expected), survivor_t3(m.config.n, m.config.k, FormulaMode::PaperPrinted));
        EXPECT_EQ(std::get<Count>(m.oracle), survivor_of({m.config.n, m.config.k, m.config.k}));
    }
}

TEST(Verify, SlotCapFlagsIncompleteDeterministically) {
    SweepOptions tight{1, 20'000};
    const auto a = verify(Subject::Theorem1, range(1, 3, 1, 200), tight);
    tight.threads = 5;
    const auto b = verify(Subject::Theorem1, range(1, 3, 1, 200), tight);
    EXPECT_FALSE(a.complete);
    EXPECT_LT(a.checked, 600u);
    EXPECT_GT(a.checked, 0u);
    EXPECT_EQ(a.checked, b.checked);
}

TEST(Verify, SubjectNamesRoundTrip) {
    for (const auto& [subject, name] : kSubjectNames) EXPECT_EQ(parse_subject(name), subject);
    EXPECT_FALSE(parse_subject("Theorem9").has_value());
}

// ---------------------------------------------------------------------------
// surveys

TEST(Survey, ConstantSurvivor) {
    const auto rows = sweep_constant_survivor(4, 50, 8);
    EXPECT_NE(std::find(rows.begin(), rows.end(), SurvivorRow{13, 4, 0, 10}), rows.end());

    const auto two = sweep_constant_survivor(1, 2, 3);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0].n, 2u);
    EXPECT_EQ(two[0].survivor, survivor_of({2, 1, 1}));

    EXPECT_TRUE(sweep_constant_survivor(6, 6, 4).empty());
}

TEST(Survey, KGreaterThanN) {
    const auto rows = survey_k_greater_than_n(25, 12);
    auto find = [&](Count n, Count k) {
        return std::find_if(rows.begin(), rows.end(), [&](const SurvivorRow& r) { return r.n == n && r.k == k; });
    };
    ASSERT_NE(find(3, 4), rows.end());
    EXPECT_EQ(find(3, 4)->survivor, 2u);
    EXPECT_EQ(find(2, 3), rows.end());
    for (Count k = 2; k <= 25; ++k) {
        ASSERT_NE(find(1, k), rows.end());
        EXPECT_EQ(find(1, k)->survivor, 0u);
    }
    EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end(), [](const SurvivorRow& a, const SurvivorRow& b) {
        return std::tie(a.k, a.n) < std::tie(b.k, b.n);
    }));
}

TEST(Survey, NonCoprime) {
    const auto rows = survey_noncoprime(range(3, 3, 12, 12, 2, 2));
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].survivor, survivor_of({12, 3, 2}));
    EXPECT_EQ(rows[0].scaled_prediction, 4 * survivor_of({3, 3, 2}));
    EXPECT_EQ(rows[0].scaling_holds, true);

    EXPECT_TRUE(survey_noncoprime(range(1, 1, 1, 1)).empty());
    auto coprime = range(1, 4, 1, 30);
    coprime.coprime_only = true;
    EXPECT_TRUE(survey_noncoprime(coprime).empty());
}

TEST(Survey, NonCoprimeWithoutScalingHasNoColumn) {
    const auto rows = survey_noncoprime(range(3, 3, 6, 6, 1, 1));  // gcd(6, 4) = 2, 4 does not divide 6
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_FALSE(rows[0].scaling_holds.has_value());
}

TEST(Survey, CapRaises) {
    EXPECT_THROW(sweep_constant_survivor(4, 500, 8, {1, 1000}), ResourceError);
}

// ---------------------------------------------------------------------------
// serialization

TEST(ReportIo, CsvLayout) {
    const auto rep = verify(Subject::Theorem3PaperPrinted, range(4, 4, 13, 13));
    EXPECT_EQ(io::to_csv(rep), "subject,k,n,lives,expected,oracle\nTheorem3PaperPrinted,4,13,4,9,10\n");
}

TEST(ReportIo, CsvSetsAndAbsent) {
    const auto rep = verify(Subject::OneLifeSetPaperPrinted, range(3, 3, 5, 5, 2, 2));
    const auto csv = io::to_csv(rep);
    EXPECT_NE(csv.find("OneLifeSetPaperPrinted,3,5,2,"), std::string::npos);
    EXPECT_EQ(csv.back(), '\n');
    EXPECT_EQ(csv.substr(csv.size() - 2), ",\n");  // oracle absent
}

TEST(ReportIo, JsonMirrorsReport) {
    const auto rep = verify(Subject::Theorem2, range(3, 3, 1, 20));
    const auto j = io::to_json(rep);
    EXPECT_EQ(j["subject"], "Theorem2");
    EXPECT_EQ(j["checked"], rep.checked);
    EXPECT_EQ(j["complete"], true);
    EXPECT_EQ(j["mismatch_count"], 0);
    EXPECT_TRUE(j["mismatches"].is_array());
    EXPECT_EQ(j["range"]["n_max"], 20);

    const auto printed = io::to_json(verify(Subject::Theorem3PaperPrinted, range(4, 4, 13, 13)));
    EXPECT_EQ(printed["mismatches"][0]["expected"], 9);
    EXPECT_EQ(printed["mismatches"][0]["oracle"], 10);
    EXPECT_FALSE(printed["mismatches"][0].contains("soldier"));
}

TEST(ReportIo, OutcomeSchema) {
    const auto j = io::outcome_json(run({10, 2, 1}));
    EXPECT_EQ(j["survivor"], 6);
    EXPECT_EQ(j["order"][0], nlohmann::json::array({1, 1}));
    EXPECT_EQ(j["order"].size(), 9u);
    const auto d = io::outcome_json(run({10, 2, 1}, RunMode::Depletion));
    EXPECT_TRUE(d["survivor"].is_null());
    EXPECT_EQ(d["order"].size(), 10u);
}
