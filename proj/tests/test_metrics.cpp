#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "smt/metrics.hpp"
#include "smt/rng.hpp"
#include "smt/simulate.hpp"

using namespace smt;

namespace {

ReplicationRecord record(long fp, long tp, long m0, long m1, const ScalingSpec& s) {
    Confusion c;
    c.fp = fp;
    c.tp = tp;
    c.fn = m1 - tp;
    c.tn = m0 - fp;
    return ReplicationRecord{c, sfdp(c, s)};
}

} // namespace

TEST_CASE("estimate_metrics on hand-built records") {
    const auto lin = ScalingSpec::linear();

    SUBCASE("all clean replications") {
        std::vector<ReplicationRecord> recs;
        for (int i = 0; i < 4; ++i) recs.push_back(record(0, 2, 5, 5, lin));
        auto rep = estimate_metrics(recs, MetricParams{});
        CHECK(rep.sev.value == 0.0);
        CHECK(rep.fdr.value == 0.0);
        CHECK(rep.pfer.value == 0.0);
        CHECK(rep.fwer.value == 0.0);
    }
    SUBCASE("two-point average") {
        std::vector<ReplicationRecord> recs = {record(1, 0, 5, 5, lin),
                                               record(0, 0, 5, 5, lin)};
        auto rep = estimate_metrics(recs, MetricParams{});
        CHECK(rep.fdr.value == doctest::Approx(0.5));
        CHECK(rep.fwer.value == doctest::Approx(0.5));
        CHECK(rep.pfer.value == doctest::Approx(0.5));
    }
    SUBCASE("gain with lambda=2") {
        std::vector<ReplicationRecord> recs = {record(2, 3, 5, 5, lin)};
        MetricParams params;
        params.lambda = 2.0;
        auto rep = estimate_metrics(recs, params);
        CHECK(rep.gain.value == doctest::Approx(-1.0));
    }
    SUBCASE("empty record list throws") {
        CHECK_THROWS_AS(estimate_metrics({}, MetricParams{}), std::invalid_argument);
    }
}

TEST_CASE("STP at beta=0 equals FWER for any record set") {
    Rng rng(41);
    const auto s = ScalingSpec::power(0.5);
    std::vector<ReplicationRecord> recs;
    for (int i = 0; i < 500; ++i)
        recs.push_back(record(static_cast<long>(rng.next_u64() % 4),
                              static_cast<long>(rng.next_u64() % 6), 10, 10, s));
    MetricParams params;
    params.beta = 0.0;
    auto rep = estimate_metrics(recs, params);
    CHECK(rep.stp.value == rep.fwer.value);
}

TEST_CASE("SEV equals FDR under linear scaling") {
    Rng rng(43);
    const auto lin = ScalingSpec::linear();
    std::vector<ReplicationRecord> recs;
    for (int i = 0; i < 500; ++i)
        recs.push_back(record(static_cast<long>(rng.next_u64() % 4),
                              static_cast<long>(rng.next_u64() % 6), 10, 10, lin));
    auto rep = estimate_metrics(recs, MetricParams{});
    CHECK(rep.sev.value == rep.fdr.value);
}

TEST_CASE("k-FWER bounded by PFER/k on simulated data") {
    GaussianShiftModel model;
    model.m0 = 100;
    model.m1 = 0;
    SevProcedureConfig cfg;
    cfg.alpha = 0.2;
    cfg.scaling = ScalingSpec::linear();
    VerifyOptions opt;
    opt.n_reps = 5000;
    opt.seed = 99;
    const auto recs = run_replications(model, cfg, opt);
    for (long k : {1L, 2L, 3L}) {
        MetricParams params;
        params.k = k;
        auto rep = estimate_metrics(recs, params);
        const double tol =
            3.0 * (rep.kfwer.std_error + rep.pfer.std_error / static_cast<double>(k));
        CHECK(rep.kfwer.value <= rep.pfer.value / static_cast<double>(k) + tol);
    }
}

TEST_CASE("gain is affine and non-increasing in lambda") {
    Rng rng(47);
    const auto lin = ScalingSpec::linear();
    std::vector<ReplicationRecord> recs;
    for (int i = 0; i < 100; ++i)
        recs.push_back(record(static_cast<long>(rng.next_u64() % 3),
                              static_cast<long>(rng.next_u64() % 5), 8, 8, lin));
    double prev = 0.0;
    std::vector<double> values;
    for (double lambda : {1.0, 2.0, 3.0}) {
        MetricParams params;
        params.lambda = lambda;
        auto rep = estimate_metrics(recs, params);
        values.push_back(rep.gain.value);
        if (!values.empty() && values.size() > 1) CHECK(rep.gain.value <= prev);
        prev = rep.gain.value;
    }
    // Affine: equal successive differences.
    CHECK(values[0] - values[1] == doctest::Approx(values[1] - values[2]).epsilon(1e-12));
}

TEST_CASE("sfdp quantiles, lower interpolation") {
    const auto lin = ScalingSpec::linear();
    SUBCASE("median of a short list") {
        std::vector<ReplicationRecord> recs = {record(0, 1, 3, 3, lin),
                                               record(0, 2, 3, 3, lin),
                                               record(1, 0, 3, 3, lin)};
        CHECK(quantile_sfdp(recs, 0.5) == 0.0);
    }
    SUBCASE("degenerate distribution") {
        std::vector<ReplicationRecord> recs(5, record(1, 1, 3, 3, lin));
        for (double q : {0.1, 0.5, 0.9})
            CHECK(quantile_sfdp(recs, q) == doctest::Approx(0.5));
    }
    SUBCASE("rank ceil(q*n) over 1..100") {
        std::vector<ReplicationRecord> recs;
        for (int v = 1; v <= 100; ++v) {
            ReplicationRecord r = record(0, 0, 1, 0, lin);
            r.sfdp_value = static_cast<double>(v);
            recs.push_back(r);
        }
        CHECK(quantile_sfdp(recs, 0.95) == 95.0);
        CHECK(quantile_sfdp(recs, 0.5) == 50.0);
    }
    SUBCASE("q outside (0,1) throws") {
        std::vector<ReplicationRecord> recs = {record(0, 0, 1, 0, lin)};
        CHECK_THROWS_AS(quantile_sfdp(recs, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(quantile_sfdp(recs, 1.0), std::invalid_argument);
    }
}
