#include "smt/thresholds.hpp"

#include <cmath>
#include <stdexcept>

namespace smt {

long snapped_floor(double x) {
    static const double kSnap = std::ldexp(1.0, -32);
    const double nearest = std::nearbyint(x);
    if (std::fabs(x - nearest) < kSnap) x = nearest;
    return static_cast<long>(std::floor(x));
}

namespace {

void validate_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0,1)");
}

void clamp_unit(std::vector<double>& v, bool& clamped) {
    for (double& x : v) {
        if (x > 1.0) { x = 1.0; clamped = true; }
        if (x < 0.0) { x = 0.0; clamped = true; }
    }
}

} // namespace

ThresholdSequence sev_thresholds(const SevProcedureConfig& cfg, int m) {
    validate_alpha(cfg.alpha);
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (!cfg.weights.is_unit() && cfg.weights.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("weight vector length does not match m");

    ThresholdSequence t;
    t.alpha = cfg.alpha;
    t.source = "sev/" + cfg.scaling.describe() + "/" + cfg.shape.describe();
    t.values.resize(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
        t.values[static_cast<std::size_t>(i) - 1] =
            cfg.alpha / m * cfg.shape.at_rank(cfg.scaling, i, m);
    clamp_unit(t.values, t.clamped);
    return t;
}

double correction_constant(double beta, const ScalingSpec& scaling, int m,
                           bool literal_upper_index) {
    if (beta < 0.0) throw std::invalid_argument("beta must be >= 0");
    const long l = snapped_floor(beta * evaluate_scaling(scaling, 1, m)) + 1;
    long h = snapped_floor(beta * evaluate_scaling(scaling, m, m));
    if (!literal_upper_index) h += 1;
    if (h < l) return 1.0;
    double c = 0.0;
    for (long i = h; i >= l; --i) c += 1.0 / static_cast<double>(i);
    return c;
}

ThresholdSequence stp_thresholds(const StpProcedureConfig& cfg, int m) {
    validate_alpha(cfg.alpha);
    if (cfg.beta < 0.0) throw std::invalid_argument("beta must be >= 0");
    if (m < 1) throw std::invalid_argument("m must be >= 1");

    ThresholdSequence t;
    t.alpha = cfg.alpha;
    t.source = "stp/" + cfg.scaling.describe();
    t.values.resize(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        const long b = snapped_floor(cfg.beta * evaluate_scaling(cfg.scaling, i, m)) + 1;
        double ti;
        if (i <= b) {
            ti = static_cast<double>(b) / m * cfg.alpha;
        } else {
            ti = static_cast<double>(b) / static_cast<double>(m + b - i) * cfg.alpha;
        }
        t.values[static_cast<std::size_t>(i) - 1] = ti;
    }

    if (cfg.dependence == DependenceAssumption::Arbitrary) {
        const long l = snapped_floor(cfg.beta * evaluate_scaling(cfg.scaling, 1, m)) + 1;
        long h = snapped_floor(cfg.beta * evaluate_scaling(cfg.scaling, m, m));
        if (!cfg.literal_upper_index) h += 1;
        t.empty_correction = h < l;
        t.correction = correction_constant(cfg.beta, cfg.scaling, m, cfg.literal_upper_index);
        for (double& x : t.values) x /= t.correction;
    }

    clamp_unit(t.values, t.clamped);
    return t;
}

} // namespace smt
