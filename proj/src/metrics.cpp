#include "smt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smt {

namespace {

// Two-pass mean/sd keeps the aggregation deterministic and stable.
template <typename Fn>
Estimate mean_estimate(const std::vector<ReplicationRecord>& records, Fn value) {
    const std::size_t n = records.size();
    double sum = 0.0;
    for (const auto& r : records) sum += value(r);
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (const auto& r : records) {
        const double d = value(r) - mean;
        ss += d * d;
    }
    const double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    return Estimate{mean, sd / std::sqrt(static_cast<double>(n)), n};
}

} // namespace

MetricReport estimate_metrics(const std::vector<ReplicationRecord>& records,
                              const MetricParams& params) {
    if (records.empty()) throw std::invalid_argument("no replication records");
    const double m = static_cast<double>(records.front().confusion.m());

    MetricReport rep;
    rep.params = params;
    rep.sev = mean_estimate(records, [](const ReplicationRecord& r) { return r.sfdp_value; });
    rep.fdr = mean_estimate(records, [](const ReplicationRecord& r) {
        const long R = r.confusion.rejections();
        return static_cast<double>(r.confusion.fp) / static_cast<double>(std::max(R, 1L));
    });
    rep.pfer = mean_estimate(records, [](const ReplicationRecord& r) {
        return static_cast<double>(r.confusion.fp);
    });
    rep.pcer = mean_estimate(records, [m](const ReplicationRecord& r) {
        return static_cast<double>(r.confusion.fp) / m;
    });
    rep.fwer = mean_estimate(records, [](const ReplicationRecord& r) {
        return r.confusion.fp > 0 ? 1.0 : 0.0;
    });
    rep.kfwer = mean_estimate(records, [&params](const ReplicationRecord& r) {
        return r.confusion.fp >= params.k ? 1.0 : 0.0;
    });
    rep.stp = mean_estimate(records, [&params](const ReplicationRecord& r) {
        return r.sfdp_value > params.beta ? 1.0 : 0.0;
    });
    rep.mean_tp = mean_estimate(records, [](const ReplicationRecord& r) {
        return static_cast<double>(r.confusion.tp);
    });
    rep.mean_r = mean_estimate(records, [](const ReplicationRecord& r) {
        return static_cast<double>(r.confusion.rejections());
    });
    rep.gain = mean_estimate(records, [&params](const ReplicationRecord& r) {
        return static_cast<double>(r.confusion.tp) -
               params.lambda * static_cast<double>(r.confusion.fp);
    });
    return rep;
}

double quantile_sfdp(const std::vector<ReplicationRecord>& records, double q) {
    if (records.empty()) throw std::invalid_argument("no replication records");
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("quantile level must lie in (0,1)");
    std::vector<double> values;
    values.reserve(records.size());
    for (const auto& r : records) values.push_back(r.sfdp_value);
    std::sort(values.begin(), values.end());
    const auto n = static_cast<double>(values.size());
    auto rank = static_cast<std::size_t>(std::ceil(q * n));
    if (rank < 1) rank = 1;
    return values[rank - 1];
}

} // namespace smt
