#ifndef SMT_THRESHOLDS_HPP
#define SMT_THRESHOLDS_HPP

#include <string>
#include <vector>

#include "smt/scaling.hpp"

namespace smt {

/// Non-decreasing critical values t_1 <= ... <= t_m, clamped to [0,1].
struct ThresholdSequence {
    std::vector<double> values;
    double alpha = 0.0;
    std::string source;
    bool clamped = false;          // at least one value hit the [0,1] clamp
    double correction = 1.0;       // divisor applied for arbitrary dependence
    bool empty_correction = false; // correction sum was empty, C fell back to 1

    std::size_t size() const { return values.size(); }
};

enum class StepMode { StepUp, StepDown };

/// Configuration of a scaled step-wise procedure controlling E[FP/s(R)].
struct SevProcedureConfig {
    double alpha = 0.05;
    ScalingSpec scaling = ScalingSpec::linear();
    ShapeSpec shape = ShapeSpec::identity();
    WeightVector weights;
    StepMode mode = StepMode::StepUp;
};

enum class DependenceAssumption { SimesPositive, Arbitrary };

/// Configuration of the step-down procedure controlling P[FP/s(R) > beta].
struct StpProcedureConfig {
    double alpha = 0.05;
    double beta = 0.0;
    ScalingSpec scaling = ScalingSpec::linear();
    DependenceAssumption dependence = DependenceAssumption::SimesPositive;
    // Upper summation index of the correction constant: the conservative
    // default is floor(beta*s(m))+1; the literal variant uses floor(beta*s(m)).
    bool literal_upper_index = false;
};

/// t_i = (alpha/m) * xi(s(i)), clamped to [0,1]. Weights are not folded in;
/// they rescale the p-values instead.
ThresholdSequence sev_thresholds(const SevProcedureConfig& cfg, int m);

/// Two-branch critical values of the generalized step-down procedure; under
/// the arbitrary-dependence assumption every value is divided by the
/// correction constant.
ThresholdSequence stp_thresholds(const StpProcedureConfig& cfg, int m);

/// C_{l,h} = sum_{i=l..h} 1/i with l = floor(beta*s(1))+1 and h per config;
/// 1 when the sum is empty.
double correction_constant(double beta, const ScalingSpec& scaling, int m,
                           bool literal_upper_index = false);

/// floor(x) with values within 2^-32 of an integer snapped to it first,
/// so products like 0.2*5 floor to 1 and not 0.
long snapped_floor(double x);

} // namespace smt

#endif // SMT_THRESHOLDS_HPP
