#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "weyl/builtin_catalog.hpp"
#include "weyl/catalog.hpp"
#include "weyl/io.hpp"

using weyl::Assignment;
using weyl::Scalar;
using weyl::Verdict;

namespace {

const weyl::Catalog& cat() { return weyl::builtin_catalog(); }
const weyl::CatalogRow& row(int id) { return weyl::find_row(cat(), id); }
Scalar sc(std::string_view s) { return weyl::parse_scalar(s); }
weyl::BraidingMatrix mat(std::string_view s) { return weyl::parse_matrix(s); }

} // namespace

TEST(CatalogData, ShapeOfTheTable) {
    ASSERT_EQ(cat().size(), 16u);
    for (int id = 1; id <= 16; ++id) EXPECT_EQ(row(id).row_id, id);
    const std::size_t forms[] = {1, 1, 2, 1, 1, 1, 1, 3, 3, 3, 1, 3, 4, 2, 4, 2};
    for (int id = 1; id <= 16; ++id) EXPECT_EQ(row(id).forms.size(), forms[id - 1]) << "row " << id;
    EXPECT_THROW(weyl::find_row(cat(), 17), weyl::error);
}

TEST(CatalogData, FileMatchesBuiltin) {
    std::ifstream in(WEYL_SOURCE_DIR "/data/rank2_table.json");
    ASSERT_TRUE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto loaded = weyl::parse_catalog(ss.str());
    ASSERT_EQ(loaded.size(), cat().size());
    for (std::size_t k = 0; k < loaded.size(); ++k) {
        EXPECT_EQ(loaded[k].forms, cat()[k].forms);
        EXPECT_EQ(loaded[k].fixed.size(), cat()[k].fixed.size());
    }
}

// ---------------------------------------------------------------------------
// instantiation

TEST(Instantiate, RowThree) {
    const auto inst = weyl::instantiate_row(row(3), {{"q", sc("t")}});
    EXPECT_EQ(inst.class_set.size(), 2u);
    EXPECT_EQ(inst.members.size(), 2u);
    EXPECT_EQ(inst.members[0].matrix, mat("t, 1; t^-1, -1"));
}

TEST(Instantiate, RowSevenFreeRoot) {
    const auto inst = weyl::instantiate_row(row(7), {});
    EXPECT_EQ(inst.class_set.size(), 2u);
    EXPECT_EQ(inst.members[0].matrix, mat("u(1/3), 1; u(5/6), u(1/2)"));
}

TEST(Instantiate, RowEight) {
    const auto inst = weyl::instantiate_row(row(8), {{"zeta0", sc("u(1/12)")}});
    EXPECT_EQ(inst.class_set.size(), 5u);
    EXPECT_EQ(inst.members.size(), 6u);
}

TEST(Instantiate, DomainViolations) {
    EXPECT_THROW(weyl::instantiate_row(row(9), {{"zeta", sc("u(1/6)")}}), weyl::domain_violation);
    EXPECT_THROW(weyl::instantiate_row(row(9), {}), weyl::domain_violation);
    EXPECT_THROW(weyl::instantiate_row(row(9), {{"zeta", sc("u(1/12)")}, {"w", sc("t")}}), weyl::domain_violation);
    EXPECT_THROW(weyl::instantiate_row(row(2), {{"q", sc("u(1/5)")}}), weyl::domain_violation);
    EXPECT_THROW(weyl::instantiate_row(row(3), {{"q", sc("-1")}}), weyl::domain_violation);
    EXPECT_THROW(weyl::instantiate_row(row(6), {{"zeta", sc("u(1/3)")}, {"q0", sc("u(1/3)")}}),
                 weyl::domain_violation);
    EXPECT_NO_THROW(weyl::instantiate_row(row(14), {{"zeta0", sc("u(3/20)")}}));
    EXPECT_NO_THROW(weyl::instantiate_row(row(14), {{"zeta0", sc("u(2/5)")}}));
}

TEST(Instantiate, AdmissibleAssignments) {
    EXPECT_EQ(weyl::admissible_assignments(row(9)).size(), 4u);
    EXPECT_EQ(weyl::admissible_assignments(row(14)).size(), 12u);
    EXPECT_EQ(weyl::admissible_assignments(row(7)).size(), 1u);
    const auto one = weyl::admissible_assignments(row(1));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].at("a"), sc("t"));
    EXPECT_EQ(one[0].at("b"), sc("s"));
    EXPECT_EQ(weyl::primitive_roots(12).size(), 4u);
}

// ---------------------------------------------------------------------------
// verification

TEST(Verify, SingleRows) {
    const auto two = weyl::verify_row(row(2), {{"q", sc("t")}});
    EXPECT_EQ(two.verdict, Verdict::pass) << two.detail;
    EXPECT_EQ(two.orbit_size, 1u);

    const auto fifteen = weyl::verify_row(row(15), {{"zeta", sc("u(1/30)")}});
    EXPECT_EQ(fifteen.verdict, Verdict::pass) << fifteen.detail;
    EXPECT_EQ(fifteen.class_count, 4u);
}

TEST(Verify, MutatedRowFails) {
    weyl::CatalogRow bad = row(2);
    bad.forms[0][2] = sc("q^2");
    const auto v = weyl::verify_row(bad, {{"q", sc("t")}});
    EXPECT_EQ(v.verdict, Verdict::fail);
    EXPECT_FALSE(v.dead_ends.empty());

    // a row listing too few forms reaches a class outside itself
    weyl::CatalogRow short_row = row(15);
    short_row.forms.resize(2);
    const auto s = weyl::verify_row(short_row, {{"zeta", sc("u(1/30)")}});
    EXPECT_EQ(s.verdict, Verdict::fail);
    EXPECT_FALSE(s.extra.empty());
}

TEST(Verify, TinyBoundIsInconclusive) {
    const auto v = weyl::verify_row(row(3), {{"q", sc("t")}}, 1);
    EXPECT_EQ(v.verdict, Verdict::inconclusive);
    weyl::VerifyOptions opt;
    opt.bound = 1;
    EXPECT_EQ(weyl::verify_all(cat(), opt).overall(), Verdict::inconclusive);
}

TEST(Verify, WholeTable) {
    const auto report = weyl::verify_all(cat());
    EXPECT_EQ(report.overall(), Verdict::pass);
    for (int id = 1; id <= 16; ++id) EXPECT_EQ(report.row_verdict(id), Verdict::pass) << "row " << id;
    EXPECT_EQ(report.results.size(), 61u);
    EXPECT_TRUE(report.overlaps.empty());
    EXPECT_GT(report.disjoint_pairs_checked, 0u);
    EXPECT_EQ(report.conjugate_pairs_partial, 0u);
}

TEST(Verify, RowSubset) {
    weyl::VerifyOptions opt;
    opt.rows = {2, 4, 11};
    const auto report = weyl::verify_all(cat(), opt);
    EXPECT_EQ(report.results.size(), 3u);
    EXPECT_EQ(report.count(Verdict::pass), 3u);
}

TEST(Verify, RenamingTranscendentalsChangesNothing) {
    for (int id : {1, 2, 3, 4, 5, 6, 11}) {
        const auto& r = row(id);
        const auto a = weyl::admissible_assignments(r);
        const auto b = weyl::admissible_assignments(r, {"x", "y", "z"});
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            const auto va = weyl::verify_row(r, a[k]);
            const auto vb = weyl::verify_row(r, b[k]);
            EXPECT_EQ(va.verdict, vb.verdict) << "row " << id;
            EXPECT_EQ(va.class_count, vb.class_count);
            EXPECT_EQ(va.orbit_size, vb.orbit_size);
        }
    }
}

// ---------------------------------------------------------------------------
// classification

TEST(Classify, Examples) {
    const auto seven = weyl::classify(cat(), mat("u(1/3), 1; u(5/6), u(1/2)"));
    ASSERT_EQ(seven.kind, weyl::Classification::Kind::match);
    EXPECT_EQ(seven.row_id, 7);
    ASSERT_TRUE(seven.free_value);
    EXPECT_EQ(seven.free_value->second, sc("u(1/3)"));

    const auto one = weyl::classify(cat(), mat("t, 1; 1, t"));
    ASSERT_EQ(one.kind, weyl::Classification::Kind::match);
    EXPECT_EQ(one.row_id, 1);
    EXPECT_EQ(one.assignment.at("a"), sc("t"));

    const auto none = weyl::classify(cat(), mat("u(1/7), 1; u(1/7), u(1/7)"));
    EXPECT_EQ(none.kind, weyl::Classification::Kind::no_match);

    EXPECT_THROW(weyl::classify(cat(), mat("t")), weyl::rank_mismatch);
}

TEST(Classify, TwistedAndPermutedInputs) {
    const auto M = mat("u(1/2), u(1/5)*t; u(4/5)*t^-7, t^3");
    const auto c = weyl::classify(cat(), M);
    ASSERT_EQ(c.kind, weyl::Classification::Kind::match);
    EXPECT_EQ(c.row_id, 5);
}

TEST(Classify, EveryMemberReturnsItsRow) {
    const auto report = weyl::verify_all(cat());
    for (const auto& r : report.results) {
        const auto inst = weyl::instantiate_row(row(r.row_id), r.assignment);
        for (const auto& m : inst.members) {
            const auto c = weyl::classify(cat(), m.matrix);
            ASSERT_EQ(c.kind, weyl::Classification::Kind::match) << m.matrix;
            EXPECT_EQ(c.row_id, r.row_id) << m.matrix;
            ASSERT_TRUE(c.member);
            EXPECT_EQ(weyl::weyl_equivalent(m.matrix, c.member->matrix), weyl::Equivalence::equivalent);
        }
    }
}
