#ifndef SMT_NORMAL_HPP
#define SMT_NORMAL_HPP

namespace smt {

/// Standard normal CDF via the complementary error function.
double normal_cdf(double x);

/// Standard normal quantile, Wichura's AS241 (PPND16). Throws for u
/// outside the open interval (0,1).
double normal_quantile(double u);

} // namespace smt

#endif // SMT_NORMAL_HPP
