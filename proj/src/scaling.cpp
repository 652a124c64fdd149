#include "smt/scaling.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace smt {

double harmonic_number(int n) {
    double h = 0.0;
    for (int i = n; i >= 1; --i) h += 1.0 / i;
    return h;
}

ScalingSpec ScalingSpec::constant(double c) {
    if (!(c > 0.0)) throw std::invalid_argument("constant scaling requires c > 0");
    return ScalingSpec(Kind::Constant, c, {});
}

ScalingSpec ScalingSpec::linear() { return ScalingSpec(Kind::Linear, 0.0, {}); }

ScalingSpec ScalingSpec::truncated_linear(int tau) {
    if (tau < 1) throw std::invalid_argument("truncated linear scaling requires tau >= 1");
    return ScalingSpec(Kind::TruncatedLinear, static_cast<double>(tau), {});
}

ScalingSpec ScalingSpec::power(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("power scaling requires gamma in [0,1]");
    return ScalingSpec(Kind::Power, gamma, {});
}

ScalingSpec ScalingSpec::tabulated(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("tabulated scaling must be non-empty");
    double prev = 0.0;
    for (double v : values) {
        if (!(v > 0.0)) throw std::invalid_argument("tabulated scaling values must be positive");
        if (v < prev) throw std::invalid_argument("tabulated scaling must be non-decreasing");
        prev = v;
    }
    return ScalingSpec(Kind::Tabulated, 0.0, std::move(values));
}

double ScalingSpec::operator()(int r) const {
    switch (kind_) {
    case Kind::Constant: return param_;
    case Kind::Linear: return static_cast<double>(r);
    case Kind::TruncatedLinear: return std::min(static_cast<double>(r), param_);
    case Kind::Power: return std::pow(static_cast<double>(r), param_);
    case Kind::Tabulated: return table_[static_cast<std::size_t>(r) - 1];
    }
    throw std::logic_error("unreachable scaling kind");
}

std::string ScalingSpec::describe() const {
    char buf[64];
    switch (kind_) {
    case Kind::Constant:
        std::snprintf(buf, sizeof(buf), "constant:%g", param_);
        return buf;
    case Kind::Linear: return "linear";
    case Kind::TruncatedLinear:
        std::snprintf(buf, sizeof(buf), "truncated:%d", static_cast<int>(param_));
        return buf;
    case Kind::Power:
        std::snprintf(buf, sizeof(buf), "power:%g", param_);
        return buf;
    case Kind::Tabulated: return "tabulated";
    }
    return "?";
}

double evaluate_scaling(const ScalingSpec& spec, int r, int m) {
    if (r < 1 || r > m) throw std::out_of_range("scaling rank out of range 1..m");
    if (spec.kind() == ScalingSpec::Kind::Tabulated &&
        spec.table().size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("tabulated scaling length does not match m");
    return spec(r);
}

ShapeSpec ShapeSpec::identity() { return ShapeSpec(Kind::Identity, {}); }

ShapeSpec ShapeSpec::harmonic_linear() { return ShapeSpec(Kind::HarmonicLinear, {}); }

ShapeSpec ShapeSpec::tabulated(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("tabulated shape must be non-empty");
    double prev = 0.0;
    for (double v : values) {
        if (!(v > 0.0)) throw std::invalid_argument("tabulated shape values must be positive");
        if (v < prev) throw std::invalid_argument("tabulated shape must be non-decreasing");
        prev = v;
    }
    return ShapeSpec(Kind::Tabulated, std::move(values));
}

double ShapeSpec::at_rank(const ScalingSpec& s, int i, int m) const {
    switch (kind_) {
    case Kind::Identity: return evaluate_scaling(s, i, m);
    case Kind::HarmonicLinear: return evaluate_scaling(s, i, m) / harmonic_number(m);
    case Kind::Tabulated:
        if (table_.size() != static_cast<std::size_t>(m))
            throw std::invalid_argument("tabulated shape length does not match m");
        if (i < 1 || i > m) throw std::out_of_range("shape rank out of range 1..m");
        return table_[static_cast<std::size_t>(i) - 1];
    }
    throw std::logic_error("unreachable shape kind");
}

std::string ShapeSpec::describe() const {
    switch (kind_) {
    case Kind::Identity: return "identity";
    case Kind::HarmonicLinear: return "harmonic";
    case Kind::Tabulated: return "tabulated";
    }
    return "?";
}

WeightVector::WeightVector(std::vector<double> w) : weights_(std::move(w)) {
    for (double x : weights_)
        if (!(x > 0.0)) throw std::invalid_argument("weights must be positive");
}

double WeightVector::sum(std::size_t m) const {
    if (weights_.empty()) return static_cast<double>(m);
    double s = 0.0;
    for (double x : weights_) s += x;
    return s;
}

} // namespace smt
