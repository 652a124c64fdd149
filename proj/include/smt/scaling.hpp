#ifndef SMT_SCALING_HPP
#define SMT_SCALING_HPP

#include <string>
#include <vector>

namespace smt {

/// Harmonic number H_n = 1 + 1/2 + ... + 1/n, accumulated smallest term
/// first so the value is identical across call sites.
double harmonic_number(int n);

/// Non-decreasing positive scaling function s on integer ranks 1..m.
/// The named kinds interpolate between the classical error rates:
/// Constant(1) gives PFER/FWER-style control, Linear gives FDR.
class ScalingSpec {
public:
    enum class Kind { Constant, Linear, TruncatedLinear, Power, Tabulated };

    static ScalingSpec constant(double c);
    static ScalingSpec linear();
    static ScalingSpec truncated_linear(int tau);
    static ScalingSpec power(double gamma);
    // Tabulated values are validated here (positive, non-decreasing).
    static ScalingSpec tabulated(std::vector<double> values);

    Kind kind() const { return kind_; }
    double param() const { return param_; }
    const std::vector<double>& table() const { return table_; }

    // s(r) without a range check; r must be >= 1 (and <= table size when
    // tabulated).
    double operator()(int r) const;

    std::string describe() const;

private:
    ScalingSpec(Kind k, double param, std::vector<double> table)
        : kind_(k), param_(param), table_(std::move(table)) {}

    Kind kind_;
    double param_;
    std::vector<double> table_;
};

/// s(r) with full validation: 1 <= r <= m, tabulated length == m.
double evaluate_scaling(const ScalingSpec& spec, int r, int m);

/// Shape function xi applied to scaled ranks; enables control under
/// arbitrary dependence. Tabulated shapes are given per rank i, so the
/// evaluation xi(s(i)) reads the i-th table entry directly; a table with
/// entry i at rank i therefore realizes xi = s^{-1}.
class ShapeSpec {
public:
    enum class Kind { Identity, HarmonicLinear, Tabulated };

    static ShapeSpec identity();
    static ShapeSpec harmonic_linear();
    static ShapeSpec tabulated(std::vector<double> values);

    Kind kind() const { return kind_; }
    const std::vector<double>& table() const { return table_; }

    // xi(s(i)) for rank i of m.
    double at_rank(const ScalingSpec& s, int i, int m) const;

    std::string describe() const;

private:
    ShapeSpec(Kind k, std::vector<double> table)
        : kind_(k), table_(std::move(table)) {}

    Kind kind_;
    std::vector<double> table_;
};

/// Per-hypothesis positive weights w_i; empty means unit weights.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<double> w);

    bool is_unit() const { return weights_.empty(); }
    std::size_t size() const { return weights_.size(); }
    double at(std::size_t i) const { return weights_.empty() ? 1.0 : weights_[i]; }
    const std::vector<double>& values() const { return weights_; }

    double sum(std::size_t m) const;

private:
    std::vector<double> weights_;
};

} // namespace smt

#endif // SMT_SCALING_HPP
