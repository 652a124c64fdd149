#ifndef SMT_ENGINE_HPP
#define SMT_ENGINE_HPP

#include <span>

#include "smt/thresholds.hpp"
#include "smt/types.hpp"

namespace smt {

/// Boundary rank of the step-up rule on already sorted values:
/// U = max{ i : p_(i) <= t_i }, 0 when no rank qualifies.
int step_up_rank(std::span<const double> sorted_p, std::span<const double> t);

/// Boundary rank of the step-down rule:
/// U = max{ i : p_(j) <= t_j for all j <= i }.
int step_down_rank(std::span<const double> sorted_p, std::span<const double> t);

RejectionOutcome step_up(const PValueSet& pvals, const ThresholdSequence& t);
RejectionOutcome step_down(const PValueSet& pvals, const ThresholdSequence& t);

/// Replaces each p_i by p_i/w_i. Values may exceed 1; they are never
/// rejected at any threshold <= 1, so no clamping is applied.
PValueSet weighted_transform(const PValueSet& pvals, const WeightVector& w);

RejectionOutcome run_sev_procedure(const PValueSet& pvals, const SevProcedureConfig& cfg);
RejectionOutcome run_stp_procedure(const PValueSet& pvals, const StpProcedureConfig& cfg);

} // namespace smt

#endif // SMT_ENGINE_HPP
