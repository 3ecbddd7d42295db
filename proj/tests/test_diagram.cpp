#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixkit/diagram.hpp"

using namespace fixkit;

namespace {

const DiagramRow& row(const DiagramReport& r, const std::string& label) {
    for (const DiagramRow& row : r.rows) {
        if (row.mapping == label) return row;
    }
    FAIL("missing row " << label);
    throw;
}

Verdict cell(const DiagramRow& r, ClassId id) {
    for (std::size_t i = 0; i < kDiagramClasses.size(); ++i) {
        if (kDiagramClasses[i] == id) return r.cells[i].verdict;
    }
    return Verdict::Inapplicable;
}

}  // namespace

TEST_CASE("default diagram") {
    const DiagramReport r = reproduce_diagram();
    REQUIRE(r.rows.size() == 5);
    CHECK(r.inclusions_consistent);

    SUBCASE("T1") {
        const DiagramRow& t1 = row(r, "t1");
        CHECK(cell(t1, ClassId::NE) == Verdict::HoldsOnSamples);
        CHECK(cell(t1, ClassId::QNE) == Verdict::Inapplicable);
        CHECK(cell(t1, ClassId::SPC) == Verdict::HoldsOnSamples);
        CHECK(cell(t1, ClassId::DC) == Verdict::Inapplicable);
        CHECK_FALSE(t1.k_dc);
        CHECK_FALSE(t1.condition_a);
    }
    SUBCASE("T2") {
        const DiagramRow& t2 = row(r, "t2");
        for (ClassId id : kDiagramClasses) CHECK(cell(t2, id) == Verdict::HoldsOnSamples);
        REQUIRE(t2.k_dc);
        CHECK(*t2.k_dc == 0.0);
    }
    SUBCASE("T3") {
        const DiagramRow& t3 = row(r, "t3");
        CHECK(cell(t3, ClassId::NE) == Verdict::Violated);
        CHECK(cell(t3, ClassId::SPC) == Verdict::HoldsOnSamples);
        REQUIRE(t3.k_spc);
        CHECK(std::abs(*t3.k_spc - 0.6) <= 0.01);
        // 1/x moves x = 1/2 twice as far from 1 as it was.
        CHECK(cell(t3, ClassId::QNE) == Verdict::Violated);
        CHECK(cell(t3, ClassId::DC) == Verdict::HoldsOnSamples);
        REQUIRE(t3.k_dc);
        CHECK(*t3.k_dc == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("T4") {
        const DiagramRow& t4 = row(r, "t4");
        CHECK(cell(t4, ClassId::NE) == Verdict::Violated);
        CHECK(cell(t4, ClassId::QNE) == Verdict::HoldsOnSamples);
        CHECK(cell(t4, ClassId::DC) == Verdict::HoldsOnSamples);
        // Secant slopes of T4 stay in [-2, 2/3], so the SPC ratio is at most 1/3.
        CHECK(cell(t4, ClassId::SPC) == Verdict::HoldsOnSamples);
        REQUIRE(t4.k_spc);
        CHECK(*t4.k_spc <= 1.0 / 3.0);
    }
    SUBCASE("T5") {
        const DiagramRow& t5 = row(r, "t5");
        CHECK(cell(t5, ClassId::NE) == Verdict::Violated);
        CHECK(cell(t5, ClassId::QNE) == Verdict::Violated);
        CHECK(cell(t5, ClassId::SPC) == Verdict::Violated);
        CHECK(cell(t5, ClassId::DC) == Verdict::HoldsOnSamples);
        REQUIRE(t5.k_dc);
        CHECK(std::abs(*t5.k_dc - 2.0 / 3.0) <= 1e-12);
        REQUIRE(t5.condition_a);
        CHECK(t5.condition_a->verdict == Verdict::HoldsOnSamples);
    }
    SUBCASE("only the T4 SPC cell disagrees with the expected matrix") {
        REQUIRE(r.mismatches.size() == 1);
        CHECK(r.mismatches[0].mapping == "t4");
        CHECK(r.mismatches[0].class_id == ClassId::SPC);
        CHECK(r.mismatches[0].expected == Expectation::Violated);
        CHECK(r.mismatches[0].observed == Verdict::HoldsOnSamples);
        CHECK_FALSE(r.matches());
    }
    SUBCASE("strict inclusions come with witnesses") {
        bool spc = false, dc = false;
        for (const StrictInclusion& s : r.strict_inclusions) {
            CHECK(s.witness.lhs > s.witness.rhs);
            spc |= s.inclusion == "NE<SPC" && s.mapping == "t3";
            dc |= s.inclusion == "QNE<DC" && s.mapping == "t5";
        }
        CHECK(spc);
        CHECK(dc);
    }
}

TEST_CASE("a coarse grid still separates T5 from SPC at the default ceiling") {
    DiagramOptions opt;
    opt.spec = SampleSpec{51, 0, 1};
    const DiagramRow t5 = classify_mapping(make_t5(), opt);
    CHECK(cell(t5, ClassId::SPC) == Verdict::Violated);
    REQUIRE(t5.k_spc);
    CHECK(*t5.k_spc > 0.9);
}

TEST_CASE("a ceiling above the sampled T5 ratio admits it into SPC") {
    DiagramOptions opt;
    opt.spec = SampleSpec{51, 0, 1};
    opt.k_ceiling = 0.99;
    CHECK(cell(classify_mapping(make_t5(), opt), ClassId::SPC) == Verdict::HoldsOnSamples);
}

TEST_CASE("a huge tolerance hides violations and the matrix stops matching") {
    DiagramOptions opt;
    opt.spec = SampleSpec{51, 100, 1};
    opt.tol = 1e3;
    const DiagramReport r = reproduce_diagram(opt);
    CHECK(r.mismatches.size() > 1);
    for (const DiagramRow& row : r.rows) {
        CHECK(cell(row, ClassId::NE) == Verdict::HoldsOnSamples);
    }
}

TEST_CASE("expected matrix shape") {
    const auto& e = expected_membership();
    CHECK(e[0][1] == Expectation::Inapplicable);
    CHECK(e[1][0] == Expectation::Holds);
    CHECK(e[4][3] == Expectation::Holds);
    CHECK(e[4][2] == Expectation::Violated);
    CHECK(std::string(to_string(Expectation::Unconstrained)) == "any");
}

TEST_CASE("classification is deterministic") {
    const DiagramRow a = classify_mapping(make_t4());
    const DiagramRow b = classify_mapping(make_t4());
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(a.cells[i].verdict == b.cells[i].verdict);
        CHECK(a.cells[i].max_violation == b.cells[i].max_violation);
    }
    CHECK(a.k_spc == b.k_spc);
}
