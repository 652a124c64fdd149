#include "smt/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace smt {

void draw_pvalues_raw(const GaussianShiftModel& model, Rng& rng, std::vector<double>& p) {
    const int m = model.m();
    if (m < 1) throw std::invalid_argument("model must contain at least one hypothesis");
    p.resize(static_cast<std::size_t>(m));

    double shared = 0.0;
    double load_shared = 0.0, load_own = 1.0;
    if (model.dependence == GaussianShiftModel::Dependence::Equicorrelated) {
        if (!(model.rho >= 0.0 && model.rho < 1.0))
            throw std::invalid_argument("rho must lie in [0,1)");
        shared = rng.standard_normal();
        load_shared = std::sqrt(model.rho);
        load_own = std::sqrt(1.0 - model.rho);
    }

    for (int i = 0; i < m; ++i) {
        double z = load_shared * shared + load_own * rng.standard_normal();
        if (i >= model.m0) z += model.delta;
        p[static_cast<std::size_t>(i)] = normal_cdf(-z); // 1 - Phi(z)
    }
}

std::pair<PValueSet, GroundTruth> draw_pvalues(const GaussianShiftModel& model, Rng& rng) {
    std::vector<double> p;
    draw_pvalues_raw(model, rng, p);
    std::vector<PValueSet::Entry> entries;
    entries.reserve(p.size());
    std::set<std::string> nulls, alts;
    for (int i = 0; i < model.m(); ++i) {
        std::string id = "h" + std::to_string(i + 1);
        entries.push_back({id, p[static_cast<std::size_t>(i)]});
        (i < model.m0 ? nulls : alts).insert(std::move(id));
    }
    return {make_pvalue_set(std::move(entries)),
            make_ground_truth(std::move(nulls), std::move(alts))};
}

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const BoundCheck& c) { return c.pass; });
}

namespace {

// Scratch space reused across the replications of one worker.
struct RepScratch {
    std::vector<double> p;
    std::vector<double> q;      // weighted values, sorted ascending
    std::vector<int> idx;       // original indices in rank order
    std::vector<int> null_acc;  // null count among the first i ranks
};

// Runs one replication against precomputed thresholds; weights empty or
// length m. Returns (fp, tp) via the boundary rank of the chosen rule.
std::pair<int, int> run_one(const GaussianShiftModel& model, Rng& rng,
                            const std::vector<double>& thresholds,
                            const std::vector<double>& weights, bool step_up_mode,
                            RepScratch& s) {
    const int m = model.m();
    draw_pvalues_raw(model, rng, s.p);

    s.idx.resize(static_cast<std::size_t>(m));
    std::iota(s.idx.begin(), s.idx.end(), 0);
    s.q.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const auto u = static_cast<std::size_t>(i);
        s.q[u] = weights.empty() ? s.p[u] : s.p[u] / weights[u];
    }
    std::sort(s.idx.begin(), s.idx.end(), [&s](int a, int b) {
        const double qa = s.q[static_cast<std::size_t>(a)];
        const double qb = s.q[static_cast<std::size_t>(b)];
        if (qa != qb) return qa < qb;
        return a < b;
    });

    s.null_acc.resize(static_cast<std::size_t>(m) + 1);
    s.null_acc[0] = 0;
    std::vector<double>& sorted = s.p; // reuse as the sorted buffer
    for (int i = 0; i < m; ++i) {
        const auto u = static_cast<std::size_t>(i);
        s.null_acc[u + 1] = s.null_acc[u] + (s.idx[u] < model.m0 ? 1 : 0);
        sorted[u] = s.q[static_cast<std::size_t>(s.idx[u])];
    }
    sorted.resize(static_cast<std::size_t>(m));

    const int u = step_up_mode ? step_up_rank(sorted, thresholds)
                               : step_down_rank(sorted, thresholds);
    const int fp = s.null_acc[static_cast<std::size_t>(u)];
    return {fp, u - fp};
}

// Dispatches replication indices [0, n) across workers; each replication
// derives its own stream, so the partition does not affect the results.
template <typename Fn>
void parallel_for_reps(int n_reps, int workers, Fn body) {
    if (workers <= 1 || n_reps < 2) {
        for (int r = 0; r < n_reps; ++r) body(r, 0);
        return;
    }
    const int t = std::min(workers, n_reps);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(t));
    for (int w = 0; w < t; ++w) {
        pool.emplace_back([=]() {
            for (int r = w; r < n_reps; r += t) body(r, w);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace

std::vector<ReplicationRecord> run_replications(const GaussianShiftModel& model,
                                                const ProcedureVariant& proc,
                                                const VerifyOptions& opt) {
    if (opt.n_reps < 1) throw std::invalid_argument("n_reps must be >= 1");
    const int m = model.m();

    std::vector<double> thresholds;
    std::vector<double> weights;
    bool step_up_mode = true;
    const ScalingSpec* scaling = nullptr;
    if (const auto* sev = std::get_if<SevProcedureConfig>(&proc)) {
        thresholds = sev_thresholds(*sev, m).values;
        if (!sev->weights.is_unit()) weights = sev->weights.values();
        step_up_mode = sev->mode == StepMode::StepUp;
        scaling = &sev->scaling;
    } else {
        const auto& stp = std::get<StpProcedureConfig>(proc);
        thresholds = stp_thresholds(stp, m).values;
        step_up_mode = false;
        scaling = &stp.scaling;
    }

    std::vector<ReplicationRecord> records(static_cast<std::size_t>(opt.n_reps));
    const int workers = std::max(opt.workers, 1);
    std::vector<RepScratch> scratch(static_cast<std::size_t>(std::max(workers, 1)));

    parallel_for_reps(opt.n_reps, workers, [&](int r, int w) {
        Rng rng = Rng::for_replication(opt.seed, static_cast<std::uint64_t>(r));
        auto [fp, tp] =
            run_one(model, rng, thresholds, weights, step_up_mode,
                    scratch[static_cast<std::size_t>(w)]);
        Confusion c;
        c.fp = fp;
        c.tp = tp;
        c.fn = model.m1 - tp;
        c.tn = model.m0 - fp;
        records[static_cast<std::size_t>(r)] = ReplicationRecord{c, sfdp(c, *scaling)};
    });
    return records;
}

VerifyReport verify_control(const GaussianShiftModel& model, const ProcedureVariant& proc,
                            const VerifyOptions& opt) {
    const int m = model.m();
    const auto records = run_replications(model, proc, opt);

    MetricParams params;
    params.k = opt.k;
    params.lambda = opt.lambda;
    if (const auto* stp = std::get_if<StpProcedureConfig>(&proc)) params.beta = stp->beta;

    VerifyReport report;
    report.metrics = estimate_metrics(records, params);

    auto add = [&report](const std::string& name, const Estimate& e, double bound) {
        report.checks.push_back(
            {name, e.value, e.std_error, bound, e.value <= bound + 3.0 * e.std_error});
    };

    if (const auto* sev = std::get_if<SevProcedureConfig>(&proc)) {
        // Nulls occupy the first m0 indices of the simulated vector.
        double w0 = 0.0;
        for (int i = 0; i < model.m0; ++i) w0 += sev->weights.at(static_cast<std::size_t>(i));
        add("sev", report.metrics.sev, sev->alpha / m * w0);

        const bool plain = sev->weights.is_unit() &&
                           sev->shape.kind() == ShapeSpec::Kind::Identity;
        if (model.m1 == 0) {
            bool sub_linear = true;
            for (int r = 1; r <= m && sub_linear; ++r)
                sub_linear = evaluate_scaling(sev->scaling, r, m) <= static_cast<double>(r);
            if (sub_linear && plain) add("fwer_weak", report.metrics.fwer, sev->alpha);
        }
        if (plain && sev->scaling.kind() == ScalingSpec::Kind::TruncatedLinear) {
            add("fdr", report.metrics.fdr, sev->alpha);
            add("pfer", report.metrics.pfer, sev->scaling.param() * sev->alpha);
        }
        if (plain && sev->scaling.kind() == ScalingSpec::Kind::Constant) {
            add("pfer", report.metrics.pfer, sev->scaling.param() * sev->alpha);
        }
    } else {
        const auto& stp = std::get<StpProcedureConfig>(proc);
        add("stp", report.metrics.stp, stp.alpha);
    }
    return report;
}

std::vector<CurvePoint> optimize_parameter(const GainStudyConfig& study,
                                           const GaussianShiftModel& model) {
    if (study.lambdas.empty()) throw std::invalid_argument("lambda grid must be non-empty");
    if (!std::is_sorted(study.lambdas.begin(), study.lambdas.end()))
        throw std::invalid_argument("lambda grid must be sorted");
    if (study.n_reps < 1) throw std::invalid_argument("n_reps must be >= 1");

    const int m = model.m();
    std::vector<double> params;
    std::vector<std::vector<double>> thresholds;
    if (study.family == GainStudyConfig::Family::PowerGamma) {
        if (study.gammas.empty() || !std::is_sorted(study.gammas.begin(), study.gammas.end()))
            throw std::invalid_argument("gamma grid must be non-empty and sorted");
        for (double g : study.gammas) {
            params.push_back(g);
            SevProcedureConfig cfg;
            cfg.alpha = study.alpha;
            cfg.scaling = ScalingSpec::power(g);
            thresholds.push_back(sev_thresholds(cfg, m).values);
        }
    } else {
        if (study.taus.empty() || !std::is_sorted(study.taus.begin(), study.taus.end()))
            throw std::invalid_argument("tau grid must be non-empty and sorted");
        for (int tau : study.taus) {
            params.push_back(static_cast<double>(tau));
            SevProcedureConfig cfg;
            cfg.alpha = study.alpha;
            cfg.scaling = ScalingSpec::truncated_linear(tau);
            thresholds.push_back(sev_thresholds(cfg, m).values);
        }
    }

    const std::size_t n_params = params.size();
    const auto n = static_cast<std::size_t>(study.n_reps);
    // Per replication and grid point; common random numbers across the grid.
    std::vector<int> tp_tab(n * n_params), fp_tab(n * n_params);

    const int workers = std::max(study.workers, 1);
    std::vector<RepScratch> scratch(static_cast<std::size_t>(workers));
    parallel_for_reps(study.n_reps, workers, [&](int r, int w) {
        auto& s = scratch[static_cast<std::size_t>(w)];
        Rng rng = Rng::for_replication(study.seed, static_cast<std::uint64_t>(r));
        std::vector<double> p;
        draw_pvalues_raw(model, rng, p);

        s.idx.resize(static_cast<std::size_t>(m));
        std::iota(s.idx.begin(), s.idx.end(), 0);
        std::sort(s.idx.begin(), s.idx.end(), [&p](int a, int b) {
            const double pa = p[static_cast<std::size_t>(a)];
            const double pb = p[static_cast<std::size_t>(b)];
            if (pa != pb) return pa < pb;
            return a < b;
        });
        s.q.resize(static_cast<std::size_t>(m));
        s.null_acc.resize(static_cast<std::size_t>(m) + 1);
        s.null_acc[0] = 0;
        for (int i = 0; i < m; ++i) {
            const auto u = static_cast<std::size_t>(i);
            s.q[u] = p[static_cast<std::size_t>(s.idx[u])];
            s.null_acc[u + 1] = s.null_acc[u] + (s.idx[u] < model.m0 ? 1 : 0);
        }

        for (std::size_t j = 0; j < n_params; ++j) {
            const int u = step_up_rank(s.q, thresholds[j]);
            const int fp = s.null_acc[static_cast<std::size_t>(u)];
            tp_tab[static_cast<std::size_t>(r) * n_params + j] = u - fp;
            fp_tab[static_cast<std::size_t>(r) * n_params + j] = fp;
        }
    });

    std::vector<CurvePoint> curve;
    curve.reserve(study.lambdas.size());
    for (double lambda : study.lambdas) {
        CurvePoint best;
        bool have = false;
        for (std::size_t j = 0; j < n_params; ++j) {
            double sum = 0.0;
            for (std::size_t r = 0; r < n; ++r)
                sum += tp_tab[r * n_params + j] - lambda * fp_tab[r * n_params + j];
            const double mean = sum / static_cast<double>(n);
            double ss = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                const double d =
                    tp_tab[r * n_params + j] - lambda * fp_tab[r * n_params + j] - mean;
                ss += d * d;
            }
            const double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
            // Strict improvement only: ties resolve toward the smaller
            // parameter already held.
            if (!have || mean > best.gain) {
                best = CurvePoint{lambda, params[j], mean,
                                  sd / std::sqrt(static_cast<double>(n))};
                have = true;
            }
        }
        curve.push_back(best);
    }
    return curve;
}

double two_test_gain(double delta, double lambda, double cv) {
    return normal_cdf(delta - cv) - lambda * normal_cdf(-cv);
}

double two_test_optimal_cv(double delta, double lambda) {
    if (!(delta > 0.0)) throw std::invalid_argument("optimal critical value requires delta > 0");
    if (!(lambda >= 1.0)) throw std::invalid_argument("lambda must be >= 1");
    return std::log(lambda) / delta + delta / 2.0;
}

double two_test_min_effect(double lambda) {
    if (!(lambda >= 1.0)) throw std::invalid_argument("lambda must be >= 1");
    return std::sqrt(2.0 * std::log(lambda));
}

} // namespace smt
