#pragma once

#include <utility>

#include "dnr/common.hpp"
#include "dnr/feeder.hpp"

namespace dnr {

/// Watt-var control curve for an injecting DER, parameterized by the slope
/// and intercept of its middle segment: q = beta*p + gamma there. The curve
/// is flat at 0 below breakpoint p1 and saturates at -q_max above p2.
struct WattVarCurve {
  double beta = 0.0;   // negative
  double gamma = 0.0;  // positive

  /// Breakpoints recovered from the slope/intercept form:
  /// p1 = -gamma/beta, p2 = -(q_max + gamma)/beta. Requires beta < 0.
  std::pair<double, double> breakpoints(double q_max) const;

  /// Piecewise evaluation of the rule; ties at breakpoints resolve to the
  /// lower segment index.
  double q_at(double p, double q_max) const;
};

std::pair<double, double> recover_breakpoints(double beta, double gamma,
                                              double q_max);

/// Standard-mandated deadband/slope box on the breakpoints:
/// 0.4 p_max <= p1 <= 0.8 p_max and p1 + 0.1 p_max <= p2 <= p_max.
bool breakpoints_feasible(double p1, double p2, double p_max, double tol = 0.0);

/// The same box expressed directly on (beta, gamma):
/// -0.4 p_max beta <= gamma <= -0.8 p_max beta,
/// p_max beta + gamma <= -q_max, and -q_max <= 0.1 p_max beta.
bool curve_box_feasible(double beta, double gamma, double p_max, double q_max,
                        double tol = 0.0);

/// Interval of admissible slopes implied by the box:
/// beta in [-q_max/(0.1 p_max), -q_max/(0.6 p_max)].
std::pair<double, double> beta_range(double p_max, double q_max);

/// Interval of admissible intercepts over all admissible slopes:
/// gamma in [(2/3) q_max, 8 q_max].
std::pair<double, double> gamma_range(double p_max, double q_max);

}  // namespace dnr
