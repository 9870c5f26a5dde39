#include "dnr/curve.hpp"

namespace dnr {

std::pair<double, double> recover_breakpoints(double beta, double gamma,
                                              double q_max) {
  if (!(beta < 0.0)) {
    throw Error("watt-var curve needs a negative middle-segment slope");
  }
  return {-gamma / beta, -(q_max + gamma) / beta};
}

std::pair<double, double> WattVarCurve::breakpoints(double q_max) const {
  return recover_breakpoints(beta, gamma, q_max);
}

double WattVarCurve::q_at(double p, double q_max) const {
  const auto [p1, p2] = breakpoints(q_max);
  if (p <= p1) return 0.0;
  if (p <= p2) return beta * p + gamma;
  return -q_max;
}

bool breakpoints_feasible(double p1, double p2, double p_max, double tol) {
  return p1 >= 0.4 * p_max - tol && p1 <= 0.8 * p_max + tol &&
         p2 >= p1 + 0.1 * p_max - tol && p2 <= p_max + tol;
}

bool curve_box_feasible(double beta, double gamma, double p_max, double q_max,
                        double tol) {
  return gamma >= -0.4 * p_max * beta - tol &&
         gamma <= -0.8 * p_max * beta + tol &&
         p_max * beta + gamma <= -q_max + tol &&
         0.1 * p_max * beta >= -q_max - tol;
}

std::pair<double, double> beta_range(double p_max, double q_max) {
  return {-q_max / (0.1 * p_max), -q_max / (0.6 * p_max)};
}

std::pair<double, double> gamma_range(double p_max, double q_max) {
  return {(2.0 / 3.0) * q_max, 8.0 * q_max};
}

}  // namespace dnr
