#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dnr/mip/model.hpp"

namespace dnr::mip {

/// Affine expression c0 + sum(coeff * var), used where a product has to be
/// taken against something that is not a plain variable.
struct AffineExpr {
  std::vector<std::pair<VarId, double>> terms;
  double constant = 0.0;

  static AffineExpr variable(VarId v) { return {{{v, 1.0}}, 0.0}; }
};

/// Interval [lo, hi] of an affine expression over the variable boxes.
std::pair<double, double> affine_bounds(const MipModel& model,
                                        const AffineExpr& expr);

/// Exact linearization of z = x * y for binary x and bounded continuous y.
/// Adds four rows; for integral x the only feasible z is x*y.
VarId mccormick_product(MipModel& model, VarId x, VarId y, std::string role,
                        int t = -1, int entity = -1);

/// Same, with the continuous factor given as a bounded affine expression.
VarId mccormick_product(MipModel& model, VarId x, const AffineExpr& y,
                        std::string role, int t = -1, int entity = -1);

/// Underestimation error of the K-tangent outer approximation of coeff*w^2
/// on [-w_abs_max, w_abs_max]: coeff * (2W/(K-1))^2 / 4.
double epigraph_error_bound(double coeff, double w_abs_max, int tangents);

/// Epigraph variable l >= coeff * w^2 realized as K tangent cuts at
/// abscissae equally spaced on [-W, W], W = max(|lo(w)|, |hi(w)|).
/// l is bounded to [0, coeff*W^2]; the underestimation error anywhere in
/// [-W, W] is at most epigraph_error_bound(coeff, W, K).
VarId convex_loss_epigraph(MipModel& model, VarId w, double coeff,
                           int tangents, std::string role, int t = -1,
                           int entity = -1);

}  // namespace dnr::mip
