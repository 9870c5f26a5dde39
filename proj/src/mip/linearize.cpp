#include "dnr/mip/linearize.hpp"

#include <cmath>
#include <limits>

namespace dnr::mip {

std::pair<double, double> affine_bounds(const MipModel& model,
                                        const AffineExpr& expr) {
  double lo = expr.constant;
  double hi = expr.constant;
  for (const auto& [v, c] : expr.terms) {
    const Variable& var = model.var(v);
    if (c >= 0) {
      lo += c * var.lower;
      hi += c * var.upper;
    } else {
      lo += c * var.upper;
      hi += c * var.lower;
    }
  }
  return {lo, hi};
}

VarId mccormick_product(MipModel& model, VarId x, VarId y, std::string role,
                        int t, int entity) {
  return mccormick_product(model, x, AffineExpr::variable(y), std::move(role),
                           t, entity);
}

VarId mccormick_product(MipModel& model, VarId x, const AffineExpr& y,
                        std::string role, int t, int entity) {
  if (model.var(x).kind != VarKind::binary) {
    throw ModelError("mccormick_product: gating factor '" + model.var(x).role +
                     "' is not binary");
  }
  const auto [y_lo, y_hi] = affine_bounds(model, y);
  if (!std::isfinite(y_lo) || !std::isfinite(y_hi)) {
    throw ModelError("mccormick_product: unbounded continuous factor in '" +
                     role + "'");
  }
  const VarId z = model.add_continuous(std::min(0.0, y_lo), std::max(0.0, y_hi),
                                       role);
  // z <= x*y_hi  and  z >= x*y_lo
  model.add_constraint({{z, 1.0}, {x, -y_hi}}, Sense::le, 0.0, role + " cap_hi",
                       t, entity);
  model.add_constraint({{z, 1.0}, {x, -y_lo}}, Sense::ge, 0.0, role + " cap_lo",
                       t, entity);
  // z <= y + (x-1)*y_lo  and  z >= y + (x-1)*y_hi
  {
    std::vector<std::pair<VarId, double>> terms{{z, 1.0}, {x, -y_lo}};
    for (const auto& [v, c] : y.terms) terms.emplace_back(v, -c);
    model.add_constraint(std::move(terms), Sense::le, y.constant - y_lo,
                         role + " tie_hi", t, entity);
  }
  {
    std::vector<std::pair<VarId, double>> terms{{z, 1.0}, {x, -y_hi}};
    for (const auto& [v, c] : y.terms) terms.emplace_back(v, -c);
    model.add_constraint(std::move(terms), Sense::ge, y.constant - y_hi,
                         role + " tie_lo", t, entity);
  }
  return z;
}

double epigraph_error_bound(double coeff, double w_abs_max, int tangents) {
  const double spacing = 2.0 * w_abs_max / static_cast<double>(tangents - 1);
  return coeff * spacing * spacing / 4.0;
}

VarId convex_loss_epigraph(MipModel& model, VarId w, double coeff,
                           int tangents, std::string role, int t, int entity) {
  if (tangents < 2) {
    throw ModelError("convex_loss_epigraph: need at least 2 tangents");
  }
  const Variable& wv = model.var(w);
  if (!std::isfinite(wv.lower) || !std::isfinite(wv.upper)) {
    throw ModelError("convex_loss_epigraph: unbounded variable '" + wv.role +
                     "'");
  }
  const double W = std::max(std::abs(wv.lower), std::abs(wv.upper));
  const VarId l = model.add_continuous(0.0, coeff * W * W, role);
  // tangent of coeff*w^2 at a:  l >= coeff*(2*a*w - a^2)
  for (int k = 0; k < tangents; ++k) {
    const double a = -W + 2.0 * W * static_cast<double>(k) /
                              static_cast<double>(tangents - 1);
    model.add_constraint({{l, 1.0}, {w, -2.0 * coeff * a}}, Sense::ge,
                         -coeff * a * a, role + " cut", t, entity);
  }
  return l;
}

}  // namespace dnr::mip
