#include "smt/engine.hpp"

#include <stdexcept>

namespace smt {

int step_up_rank(std::span<const double> sorted_p, std::span<const double> t) {
    if (sorted_p.size() != t.size())
        throw std::invalid_argument("threshold length does not match number of p-values");
    for (std::size_t i = sorted_p.size(); i > 0; --i)
        if (sorted_p[i - 1] <= t[i - 1]) return static_cast<int>(i);
    return 0;
}

int step_down_rank(std::span<const double> sorted_p, std::span<const double> t) {
    if (sorted_p.size() != t.size())
        throw std::invalid_argument("threshold length does not match number of p-values");
    std::size_t u = 0;
    while (u < sorted_p.size() && sorted_p[u] <= t[u]) ++u;
    return static_cast<int>(u);
}

namespace {

RejectionOutcome reject_prefix(const PValueSet& pvals, int u) {
    const auto order = pvals.rank_order();
    RejectionOutcome out;
    out.boundary_rank = u;
    out.rejected_ids.reserve(static_cast<std::size_t>(u));
    for (int i = 0; i < u; ++i)
        out.rejected_ids.push_back(pvals.entries[order[static_cast<std::size_t>(i)]].id);
    return out;
}

std::vector<double> sorted_values(const PValueSet& pvals) {
    const auto order = pvals.rank_order();
    std::vector<double> sorted;
    sorted.reserve(order.size());
    for (std::size_t idx : order) sorted.push_back(pvals.entries[idx].p);
    return sorted;
}

} // namespace

RejectionOutcome step_up(const PValueSet& pvals, const ThresholdSequence& t) {
    const auto sorted = sorted_values(pvals);
    return reject_prefix(pvals, step_up_rank(sorted, t.values));
}

RejectionOutcome step_down(const PValueSet& pvals, const ThresholdSequence& t) {
    const auto sorted = sorted_values(pvals);
    return reject_prefix(pvals, step_down_rank(sorted, t.values));
}

PValueSet weighted_transform(const PValueSet& pvals, const WeightVector& w) {
    if (!w.is_unit() && w.size() != pvals.size())
        throw std::invalid_argument("weight vector length does not match p-value set");
    PValueSet out;
    out.entries.reserve(pvals.size());
    for (std::size_t i = 0; i < pvals.size(); ++i)
        out.entries.push_back({pvals.entries[i].id, pvals.entries[i].p / w.at(i)});
    return out;
}

RejectionOutcome run_sev_procedure(const PValueSet& pvals, const SevProcedureConfig& cfg) {
    const int m = static_cast<int>(pvals.size());
    const PValueSet transformed = weighted_transform(pvals, cfg.weights);
    const ThresholdSequence t = sev_thresholds(cfg, m);
    return cfg.mode == StepMode::StepUp ? step_up(transformed, t) : step_down(transformed, t);
}

RejectionOutcome run_stp_procedure(const PValueSet& pvals, const StpProcedureConfig& cfg) {
    const int m = static_cast<int>(pvals.size());
    const ThresholdSequence t = stp_thresholds(cfg, m);
    return step_down(pvals, t);
}

} // namespace smt
