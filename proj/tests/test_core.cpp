#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "smt/rng.hpp"
#include "smt/scaling.hpp"
#include "smt/types.hpp"

using namespace smt;

TEST_CASE("evaluate_scaling named kinds") {
    CHECK(evaluate_scaling(ScalingSpec::power(0.5), 4, 10) == doctest::Approx(2.0));
    CHECK(evaluate_scaling(ScalingSpec::truncated_linear(3), 5, 10) == 3.0);
    CHECK(evaluate_scaling(ScalingSpec::linear(), 7, 10) == 7.0);
    CHECK(evaluate_scaling(ScalingSpec::constant(2.5), 9, 10) == 2.5);
}

TEST_CASE("evaluate_scaling rejects bad arguments") {
    CHECK_THROWS_AS(evaluate_scaling(ScalingSpec::linear(), 0, 10), std::out_of_range);
    CHECK_THROWS_AS(evaluate_scaling(ScalingSpec::linear(), 11, 10), std::out_of_range);
    CHECK_THROWS_AS(evaluate_scaling(ScalingSpec::tabulated({1.0, 2.0}), 1, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(ScalingSpec::tabulated({2.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(ScalingSpec::tabulated({0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(ScalingSpec::constant(0.0), std::invalid_argument);
    CHECK_THROWS_AS(ScalingSpec::power(1.5), std::invalid_argument);
}

TEST_CASE("scaling monotone in rank for all kinds") {
    const int m = 40;
    Rng rng(7);
    std::vector<ScalingSpec> specs = {
        ScalingSpec::linear(), ScalingSpec::constant(3.0), ScalingSpec::power(0.3),
        ScalingSpec::power(0.8), ScalingSpec::truncated_linear(7)};
    std::vector<double> tab;
    double acc = 0.1;
    for (int i = 0; i < m; ++i) {
        acc += rng.uniform_open();
        tab.push_back(acc);
    }
    specs.push_back(ScalingSpec::tabulated(tab));
    for (const auto& s : specs)
        for (int r = 1; r < m; ++r)
            CHECK(evaluate_scaling(s, r, m) <= evaluate_scaling(s, r + 1, m));
}

TEST_CASE("special-case collapse of scaling families") {
    const int m = 25;
    const auto p1 = ScalingSpec::power(1.0);
    const auto lin = ScalingSpec::linear();
    const auto tl = ScalingSpec::truncated_linear(m);
    const auto p0 = ScalingSpec::power(0.0);
    const auto c1 = ScalingSpec::constant(1.0);
    for (int r = 1; r <= m; ++r) {
        CHECK(p1(r) == lin(r));
        CHECK(lin(r) == tl(r));
        CHECK(p0(r) == c1(r));
    }
}

TEST_CASE("confusion counting") {
    GroundTruth truth = make_ground_truth({"1", "2", "3"}, {"4", "5"});

    SUBCASE("mixed rejection") {
        RejectionOutcome out{{"2", "4"}, 2};
        Confusion c = confusion(out, truth);
        CHECK(c.fp == 1);
        CHECK(c.tp == 1);
        CHECK(c.fn == 1);
        CHECK(c.tn == 2);
    }
    SUBCASE("empty rejection") {
        Confusion c = confusion(RejectionOutcome{}, truth);
        CHECK(c.fp == 0);
        CHECK(c.tp == 0);
    }
    SUBCASE("complete null, reject all") {
        GroundTruth all_null = make_ground_truth({"1", "2", "3"}, {});
        RejectionOutcome out{{"1", "2", "3"}, 3};
        Confusion c = confusion(out, all_null);
        CHECK(c.fp == 3);
        CHECK(c.tp == 0);
    }
    SUBCASE("unknown id rejected") {
        RejectionOutcome out{{"zz"}, 1};
        CHECK_THROWS_AS(confusion(out, truth), std::invalid_argument);
    }
}

TEST_CASE("confusion identities on random pairs") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + static_cast<int>(rng.next_u64() % 20);
        std::set<std::string> nulls, alts;
        std::vector<std::string> ids;
        for (int i = 0; i < m; ++i) {
            ids.push_back(std::to_string(i));
            (rng.next_u64() % 2 ? nulls : alts).insert(ids.back());
        }
        GroundTruth truth = make_ground_truth(nulls, alts);
        RejectionOutcome out;
        for (const auto& id : ids)
            if (rng.next_u64() % 2) out.rejected_ids.push_back(id);
        out.boundary_rank = static_cast<int>(out.rejected_ids.size());
        Confusion c = confusion(out, truth);
        CHECK(c.fp + c.tn == static_cast<long>(truth.m0()));
        CHECK(c.tp + c.fn == static_cast<long>(truth.m1()));
        CHECK(c.m() == m);
        CHECK(c.rejections() == static_cast<long>(out.rejected_ids.size()));
    }
}

TEST_CASE("sfdp formula and zero-rejection branch") {
    Confusion c;
    c.fp = 2;
    c.tp = 3; // R = 5
    c.fn = 0;
    c.tn = 5;
    CHECK(sfdp(c, ScalingSpec::power(0.5)) == doctest::Approx(2.0 / std::sqrt(5.0)));

    Confusion none;
    none.tn = 4;
    CHECK(sfdp(none, ScalingSpec::power(0.5)) == 0.0);
    CHECK(sfdp(none, ScalingSpec::linear()) == 0.0);

    Confusion d;
    d.fp = 3;
    d.tp = 1; // R = 4
    d.fn = 2;
    d.tn = 4;
    CHECK(sfdp(d, ScalingSpec::linear()) == doctest::Approx(0.75));
}

TEST_CASE("sfdp with linear scaling equals the FDP") {
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        Confusion c;
        c.fp = static_cast<long>(rng.next_u64() % 10);
        c.tp = static_cast<long>(rng.next_u64() % 10);
        c.fn = static_cast<long>(rng.next_u64() % 10);
        c.tn = static_cast<long>(rng.next_u64() % 10) + 1;
        const long r = c.rejections();
        const double fdp = static_cast<double>(c.fp) / static_cast<double>(std::max(r, 1L));
        CHECK(sfdp(c, ScalingSpec::linear()) == fdp);
    }
}

TEST_CASE("p-value set validation and tie order") {
    CHECK_THROWS_AS(make_pvalue_set({}), std::invalid_argument);
    CHECK_THROWS_AS(make_pvalue_set({{"a", 0.5}, {"a", 0.7}}), std::invalid_argument);
    CHECK_THROWS_AS(make_pvalue_set({{"a", 1.5}}), std::invalid_argument);
    CHECK_THROWS_AS(make_pvalue_set({{"a", -0.1}}), std::invalid_argument);

    // Ties sort by id, independent of input order.
    PValueSet a = make_pvalue_set({{"z", 0.5}, {"b", 0.5}, {"a", 0.9}});
    auto order = a.rank_order();
    CHECK(a.entries[order[0]].id == "b");
    CHECK(a.entries[order[1]].id == "z");
    CHECK(a.entries[order[2]].id == "a");
}

TEST_CASE("ground truth rejects overlapping sets") {
    CHECK_THROWS_AS(make_ground_truth({"a"}, {"a"}), std::invalid_argument);
}

TEST_CASE("harmonic number summation") {
    CHECK(harmonic_number(1) == 1.0);
    CHECK(harmonic_number(3) == doctest::Approx(11.0 / 6.0).epsilon(1e-15));
}
