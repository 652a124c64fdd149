#ifndef SMT_METRICS_HPP
#define SMT_METRICS_HPP

#include <cstddef>
#include <vector>

#include "smt/types.hpp"

namespace smt {

/// One Monte-Carlo replication: confusion counts plus the realized
/// FP/s(R) under the configured scaling.
struct ReplicationRecord {
    Confusion confusion;
    double sfdp_value = 0.0;
};

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t n_reps = 0;
};

struct MetricParams {
    long k = 1;          // k-FWER order
    double beta = 0.0;   // exceedance level for the tail probability
    double lambda = 1.0; // false-positive price in the gain
};

struct MetricReport {
    Estimate sev;     // mean of FP/s(R)
    Estimate fdr;     // mean of FP/(R v 1)
    Estimate pfer;    // mean FP
    Estimate pcer;    // mean FP/m
    Estimate fwer;    // fraction with FP > 0
    Estimate kfwer;   // fraction with FP >= k
    Estimate stp;     // fraction with FP/s(R) > beta
    Estimate mean_tp;
    Estimate mean_r;
    Estimate gain;    // mean TP - lambda * mean FP
    MetricParams params;
};

/// Plain sample means with sd/sqrt(n) standard errors, accumulated in
/// record order so repeated runs stay bit-identical.
MetricReport estimate_metrics(const std::vector<ReplicationRecord>& records,
                              const MetricParams& params);

/// Empirical q-quantile of the sfdp values, lower interpolation: the value
/// at sorted rank ceil(q*n).
double quantile_sfdp(const std::vector<ReplicationRecord>& records, double q);

} // namespace smt

#endif // SMT_METRICS_HPP
