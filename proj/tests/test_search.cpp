#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "latinq/search.hpp"

using namespace latinq;

namespace {

std::string report_text(const SearchReport& rep) {
    std::ostringstream os;
    write_report(os, rep);
    return os.str();
}

std::size_t expected_record_count(int k) {
    std::size_t total = 0;
    for (int l = 2; l <= k - 2; ++l) {
        std::size_t classes = 0;
        for (const auto& g : groups_of_order_log2(l)) classes += admissible_class_reps(g).size();
        total += classes * build_library(std::size_t{1} << (k - l)).members.size();
    }
    return total;
}

const SearchReport& report6() {
    static const SearchReport rep = search(6);
    return rep;
}

}  // namespace

TEST(Search, RangeChecks) {
    EXPECT_THROW(search(3), std::invalid_argument);
    EXPECT_THROW(search(8), std::invalid_argument);
    EXPECT_THROW(search(7), std::invalid_argument);
}

TEST(Search, OrderSixteenIsNo) {
    const auto rep = search(4);
    EXPECT_FALSE(rep.verdict());
    ASSERT_EQ(rep.records.size(), 1u);
    EXPECT_EQ(rep.records[0].group, AbelianGroup2::elementary(2));
    EXPECT_EQ(rep.records[0].base->name, "4_1");
    EXPECT_EQ(rep.records[0].log2_zld, 8);
}

TEST(Search, OrderThirtyTwoIsNo) {
    const auto rep = search(5);
    EXPECT_FALSE(rep.verdict());
    EXPECT_EQ(rep.records.size(), expected_record_count(5));
    EXPECT_EQ(rep.records.size(), 4u);
    EXPECT_EQ(rep.witness_count(), 0u);
}

TEST(Search, VisitsEveryTripleOnce) {
    const auto& rep = report6();
    EXPECT_EQ(rep.records.size(), expected_record_count(6));
    std::set<std::string> keys;
    for (const auto& r : rep.records) keys.insert(r.group.name() + "|" + r.psi.to_string() + "|" + r.base->name);
    EXPECT_EQ(keys.size(), rep.records.size());
}

TEST(Search, VerdictIffSomeWitness) {
    const auto& rep = report6();
    EXPECT_TRUE(rep.verdict());
    EXPECT_EQ(rep.verdict(), rep.witness_count() > 0);
    EXPECT_NE(report_text(rep).find("verdict YES"), std::string::npos);
}

TEST(Search, WitnessCocyclesBuildNonMedialLatinQuandles) {
    const auto& rep = report6();
    for (const auto& r : rep.records) {
        if (!r.witness) continue;
        ASSERT_TRUE(r.witness_cocycle);
        const auto e = ExtensionSpec::make(r.base->table, r.group, r.psi, *r.witness_cocycle);
        EXPECT_FALSE(check_LD(e));
        const auto q = build_extension(e);
        EXPECT_TRUE(is_quandle(q));
        EXPECT_TRUE(is_latin(q));
        const auto w = medial_witness(q);
        ASSERT_TRUE(w);
        const auto lifted = lifted_medial_witness(e, q);
        ASSERT_TRUE(lifted);
        EXPECT_TRUE(lifted->holds_in(q));
    }
}

TEST(Search, NoWitnessOverLargeFibers) {
    const auto& rep = report6();
    for (const auto& r : rep.records) {
        if (r.group.rank() == 4 || r.group == AbelianGroup2::homocyclic(2, 2)) { EXPECT_FALSE(r.witness) << r.base->name; }
        if (!r.group.is_elementary()) {
            ASSERT_TRUE(r.lifting_agrees);
            EXPECT_TRUE(*r.lifting_agrees);
        }
    }
}

TEST(Search, ReportIsDeterministicAcrossRunsAndJobCounts) {
    SearchOptions two;
    two.jobs = 2;
    const auto a = search(5), b = search(5, two);
    EXPECT_EQ(report_text(a), report_text(b));
    SearchOptions three;
    three.jobs = 3;
    EXPECT_EQ(report_text(report6()), report_text(search(6, three)));
}

TEST(Search, ProgressCallbackSeesEveryRecord) {
    std::size_t records = 0;
    SearchOptions opts;
    opts.progress = [&](const std::string& s) { records += s.rfind("record ", 0) == 0; };
    const auto rep = search(5, opts);
    EXPECT_EQ(records, rep.records.size());
}

TEST(Search, ReportListsGroupsAndLibraries) {
    const auto text = report_text(search(5));
    EXPECT_NE(text.find("group Z4xZ2 inadmissible"), std::string::npos);
    EXPECT_NE(text.find("group Z2^3 admissible-classes 2"), std::string::npos);
    EXPECT_NE(text.find("library 8 size 2"), std::string::npos);
    EXPECT_NE(text.find("verdict NO"), std::string::npos);
}
