#ifndef SMT_SIMULATE_HPP
#define SMT_SIMULATE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "smt/engine.hpp"
#include "smt/metrics.hpp"
#include "smt/rng.hpp"

namespace smt {

/// One-sided Gaussian shift model: null p-values come from Z ~ N(0,1),
/// alternatives from Z + delta. Equicorrelated adds a shared factor
/// Z_i = sqrt(rho) W + sqrt(1-rho) eps_i before the shift.
struct GaussianShiftModel {
    enum class Dependence { Independent, Equicorrelated };

    int m0 = 0;
    int m1 = 0;
    double delta = 0.0;
    Dependence dependence = Dependence::Independent;
    double rho = 0.3;

    int m() const { return m0 + m1; }
};

/// Raw draw, nulls first: p[0..m0) null, p[m0..m) alternative.
void draw_pvalues_raw(const GaussianShiftModel& model, Rng& rng, std::vector<double>& p);

/// Domain-typed draw with ids h1..hm; the first m0 are the true nulls.
std::pair<PValueSet, GroundTruth> draw_pvalues(const GaussianShiftModel& model, Rng& rng);

using ProcedureVariant = std::variant<SevProcedureConfig, StpProcedureConfig>;

struct BoundCheck {
    std::string metric;
    double estimate = 0.0;
    double std_error = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct VerifyReport {
    MetricReport metrics;
    std::vector<BoundCheck> checks;

    bool all_pass() const;
};

struct VerifyOptions {
    int n_reps = 1000;
    std::uint64_t seed = 0;
    int workers = 1;
    long k = 1;
    double lambda = 1.0;
};

/// Runs the procedure on n_reps independent draws and checks the
/// control bounds at estimate <= bound + 3 SE. The main bound is
/// (alpha/m) * sum_{I0} w_i for SEV control and alpha for STP control;
/// scalings with known side guarantees (truncated linear, constant) get
/// their FDR/PFER checks too.
VerifyReport verify_control(const GaussianShiftModel& model, const ProcedureVariant& proc,
                            const VerifyOptions& opt);

/// Per-replication procedure results, index-ordered; the building block
/// behind verify_control, exposed for tests.
std::vector<ReplicationRecord> run_replications(const GaussianShiftModel& model,
                                                const ProcedureVariant& proc,
                                                const VerifyOptions& opt);

struct GainStudyConfig {
    enum class Family { PowerGamma, TruncatedTau };

    Family family = Family::PowerGamma;
    std::vector<double> lambdas;  // sorted, each >= 1
    std::vector<double> gammas;   // sorted, in [0,1]; used by PowerGamma
    std::vector<int> taus;        // sorted, in 1..m; used by TruncatedTau
    double alpha = 0.05;
    int n_reps = 200;
    std::uint64_t seed = 0;
    int workers = 1;
};

struct CurvePoint {
    double lambda = 0.0;
    double parameter = 0.0; // argmax gamma or tau
    double gain = 0.0;      // estimated maximal gain
    double std_error = 0.0;
};

/// Gain maximization over the gamma (or tau) grid with common random
/// numbers: every grid point sees the same draws within a replication.
/// Ties at the argmax resolve toward the smaller parameter.
std::vector<CurvePoint> optimize_parameter(const GainStudyConfig& study,
                                           const GaussianShiftModel& model);

/// Expected gain of the two-test model at critical value cv:
/// Phi(delta - cv) - lambda * Phi(-cv).
double two_test_gain(double delta, double lambda, double cv);

/// Closed-form optimal critical value log(lambda)/delta + delta/2.
double two_test_optimal_cv(double delta, double lambda);

/// Effect size at which the optimal critical value is minimal,
/// sqrt(2 log(lambda)).
double two_test_min_effect(double lambda);

} // namespace smt

#endif // SMT_SIMULATE_HPP
