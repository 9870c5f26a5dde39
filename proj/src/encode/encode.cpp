#include "dnr/encode/encode.hpp"

#include <algorithm>
#include <cmath>

namespace dnr::encode {

using mip::AffineExpr;
using mip::MipModel;
using mip::Sense;
using mip::VarId;

namespace {

AffineExpr bus_voltage(const Feeder& feeder, const Omega2Layout& w2, int bus) {
  if (bus == 0) return AffineExpr{{}, feeder.v0};
  return AffineExpr::variable(w2.v.at(bus));
}

std::pair<double, double> bus_voltage_box(const Feeder& feeder, int bus) {
  if (bus == 0) return {feeder.v0, feeder.v0};
  const Bus& b = feeder.buses[static_cast<size_t>(bus)];
  return {b.v_min, b.v_max};
}

/// delta * expr with build-time shortcuts for fixed binaries: identically
/// zero when delta is fixed at 0, the expression itself when fixed at 1,
/// otherwise an exact McCormick product variable.
AffineExpr gated(MipModel& model, VarId delta, const AffineExpr& expr,
                 const std::string& role, int t, int entity) {
  const mip::Variable& dv = model.var(delta);
  if (dv.lower == dv.upper) {
    if (dv.lower == 0.0) return AffineExpr{};
    return expr;
  }
  return AffineExpr::variable(
      mip::mccormick_product(model, delta, expr, role, t, entity));
}

void add_expr_row(MipModel& model, const AffineExpr& lhs, Sense sense,
                  double rhs, std::string role, int t, int entity) {
  model.add_constraint(lhs.terms, sense, rhs - lhs.constant, std::move(role), t,
                       entity);
}

AffineExpr& operator+=(AffineExpr& a, const AffineExpr& b) {
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  a.constant += b.constant;
  return a;
}

AffineExpr scaled(const AffineExpr& a, double c) {
  AffineExpr out = a;
  for (auto& [v, coef] : out.terms) coef *= c;
  out.constant *= c;
  return out;
}

}  // namespace

Omega1Layout allocate_omega1(MipModel& model, const Feeder& feeder) {
  Omega1Layout w1;
  for (int e : feeder.switch_edges()) {
    w1.y[e] = model.add_binary("switch y e" + std::to_string(e));
  }
  for (int b : feeder.der_buses()) {
    const DerSpec& der = *feeder.buses[static_cast<size_t>(b)].der;
    const auto [beta_lo, beta_hi] = beta_range(der.p_max, der.q_max);
    const auto [gamma_lo, gamma_hi] = gamma_range(der.p_max, der.q_max);
    w1.beta[b] = model.add_continuous(beta_lo, beta_hi,
                                      "curve beta b" + std::to_string(b));
    w1.gamma[b] = model.add_continuous(gamma_lo, gamma_hi,
                                       "curve gamma b" + std::to_string(b));
  }
  for (const Edge& e : feeder.edges) {
    if (e.kind != EdgeKind::remote_regulator) continue;
    std::array<VarId, 6> bits;
    for (int k = 0; k < 6; ++k) {
      bits[static_cast<size_t>(k)] = model.add_binary(
          "tap bit" + std::to_string(k) + " e" + std::to_string(e.id));
    }
    w1.tap_bits[e.id] = bits;
    // 33 positions: the raw 6-bit value saturates at 32
    std::vector<std::pair<VarId, double>> terms;
    for (int k = 0; k < 6; ++k)
      terms.emplace_back(bits[static_cast<size_t>(k)], std::pow(2.0, k));
    model.add_constraint(std::move(terms), Sense::le, 32.0, "tap_cap", -1,
                         e.id);
  }
  return w1;
}

Omega2Layout allocate_omega2(MipModel& model, const Feeder& feeder,
                             const InstanceData& inst, int t) {
  Omega2Layout w2;
  w2.t = t;
  const std::string ts = " t" + std::to_string(t);
  for (int i = 1; i < feeder.n_buses(); ++i) {
    const Bus& b = feeder.buses[static_cast<size_t>(i)];
    w2.v[i] =
        model.add_continuous(b.v_min, b.v_max, "v b" + std::to_string(i) + ts);
  }
  for (const Bus& b : feeder.buses) {
    if (b.zip) {
      const double kp = inst.p_scale(b.id);
      const double kq = inst.q_scale(b.id);
      const double p_lo = kp * std::min({b.zip->p_lo(b.v_min),
                                         b.zip->p_lo(b.v_max)});
      const double p_hi = kp * std::max({b.zip->p_hi(b.v_min),
                                         b.zip->p_hi(b.v_max)});
      const double q_lo = kq * std::min({b.zip->q_lo(b.v_min),
                                         b.zip->q_lo(b.v_max)});
      const double q_hi = kq * std::max({b.zip->q_hi(b.v_min),
                                         b.zip->q_hi(b.v_max)});
      w2.p[b.id] = model.add_continuous(p_lo, p_hi,
                                        "p b" + std::to_string(b.id) + ts);
      w2.q[b.id] = model.add_continuous(q_lo, q_hi,
                                        "q b" + std::to_string(b.id) + ts);
    } else if (b.der) {
      const double pa = inst.p_avail(b.id);
      w2.p[b.id] =
          model.add_continuous(pa, pa, "p b" + std::to_string(b.id) + ts);
      w2.q[b.id] = model.add_continuous(-b.der->q_max, 0.0,
                                        "q b" + std::to_string(b.id) + ts);
    }
  }
  for (const Edge& e : feeder.edges) {
    w2.flow_p[e.id] = model.add_continuous(-e.p_lim, e.p_lim,
                                           "P e" + std::to_string(e.id) + ts);
    w2.flow_q[e.id] = model.add_continuous(-e.q_lim, e.q_lim,
                                           "Q e" + std::to_string(e.id) + ts);
  }
  return w2;
}

void encode_network(MipModel& model, const Feeder& feeder,
                    const Omega1Layout& w1, const Omega2Layout& w2, int t) {
  // injection balance; the substation bus has no balance row
  for (int i = 1; i < feeder.n_buses(); ++i) {
    std::vector<std::pair<VarId, double>> terms_p, terms_q;
    for (const Edge& e : feeder.edges) {
      if (e.from == i) {
        terms_p.emplace_back(w2.flow_p.at(e.id), 1.0);
        terms_q.emplace_back(w2.flow_q.at(e.id), 1.0);
      } else if (e.to == i) {
        terms_p.emplace_back(w2.flow_p.at(e.id), -1.0);
        terms_q.emplace_back(w2.flow_q.at(e.id), -1.0);
      }
    }
    auto it_p = w2.p.find(i);
    if (it_p != w2.p.end()) terms_p.emplace_back(it_p->second, -1.0);
    auto it_q = w2.q.find(i);
    if (it_q != w2.q.end()) terms_q.emplace_back(it_q->second, -1.0);
    model.add_constraint(std::move(terms_p), Sense::eq, 0.0, "balance_p", t, i);
    model.add_constraint(std::move(terms_q), Sense::eq, 0.0, "balance_q", t, i);
  }

  for (const Edge& e : feeder.edges) {
    if (e.is_regulator()) continue;  // handled by the regulator encoders
    AffineExpr drop = bus_voltage(feeder, w2, e.from);
    drop += scaled(bus_voltage(feeder, w2, e.to), -1.0);
    if (e.kind == EdgeKind::line) {
      AffineExpr row = drop;
      row.terms.emplace_back(w2.flow_p.at(e.id), -e.r);
      row.terms.emplace_back(w2.flow_q.at(e.id), -e.x);
      add_expr_row(model, row, Sense::eq, 0.0, "line_drop", t, e.id);
      continue;
    }
    // switch: the drop applies only when closed, the flow only as well
    const VarId y = w1.y.at(e.id);
    const AffineExpr z =
        gated(model, y, drop, "switch_drop", t, e.id);
    AffineExpr row = z;
    row.terms.emplace_back(w2.flow_p.at(e.id), -e.r);
    row.terms.emplace_back(w2.flow_q.at(e.id), -e.x);
    add_expr_row(model, row, Sense::eq, 0.0, "switch_drop_eq", t, e.id);

    model.add_constraint({{w2.flow_p.at(e.id), 1.0}, {y, -e.p_lim}}, Sense::le,
                         0.0, "switch_flow_cap_p_hi", t, e.id);
    model.add_constraint({{w2.flow_p.at(e.id), 1.0}, {y, e.p_lim}}, Sense::ge,
                         0.0, "switch_flow_cap_p_lo", t, e.id);
    model.add_constraint({{w2.flow_q.at(e.id), 1.0}, {y, -e.q_lim}}, Sense::le,
                         0.0, "switch_flow_cap_q_hi", t, e.id);
    model.add_constraint({{w2.flow_q.at(e.id), 1.0}, {y, e.q_lim}}, Sense::ge,
                         0.0, "switch_flow_cap_q_lo", t, e.id);
  }
}

void encode_zip(MipModel& model, const Feeder& feeder, const Omega2Layout& w2,
                const InstanceData& inst, int t) {
  for (const Bus& b : feeder.buses) {
    if (!b.zip) continue;
    const double kp = inst.p_scale(b.id);
    const double kq = inst.q_scale(b.id);
    if (kp < 0.0 || kq < 0.0)
      throw mip::ModelError("negative load scale at bus " +
                            std::to_string(b.id));
    const VarId v = w2.v.at(b.id);
    const VarId p = w2.p.at(b.id);
    const VarId q = w2.q.at(b.id);
    const ZipLoad& z = *b.zip;
    if (z.inelastic()) {
      model.add_constraint({{p, 1.0}, {v, -kp * z.alpha12(1)}}, Sense::eq,
                           kp * z.alpha0(1), "zip_p", t, b.id);
      model.add_constraint({{q, 1.0}, {v, -kq * z.alpha12(3)}}, Sense::eq,
                           kq * z.alpha0(3), "zip_q", t, b.id);
    } else {
      model.add_constraint({{p, 1.0}, {v, -kp * z.alpha12(0)}}, Sense::ge,
                           kp * z.alpha0(0), "zip_p_lo", t, b.id);
      model.add_constraint({{p, 1.0}, {v, -kp * z.alpha12(1)}}, Sense::le,
                           kp * z.alpha0(1), "zip_p_hi", t, b.id);
      model.add_constraint({{q, 1.0}, {v, -kq * z.alpha12(2)}}, Sense::ge,
                           kq * z.alpha0(2), "zip_q_lo", t, b.id);
      model.add_constraint({{q, 1.0}, {v, -kq * z.alpha12(3)}}, Sense::le,
                           kq * z.alpha0(3), "zip_q_hi", t, b.id);
    }
  }
}

void encode_wattvar(MipModel& model, const Feeder& feeder, int der_bus,
                    const Omega1Layout& w1, Omega2Layout& w2, double p_avail,
                    int t) {
  const Bus& bus = feeder.buses[static_cast<size_t>(der_bus)];
  if (!bus.der) throw mip::ModelError("bus carries no DER");
  const double p_max = bus.der->p_max;
  const double q_max = bus.der->q_max;
  if (p_max <= 0.0 || q_max <= 0.0)
    throw mip::ModelError("DER ratings must be positive");
  if (p_avail < 0.0 || p_avail > p_max + 1e-12)
    throw mip::ModelError("available power outside [0, p_max] at bus " +
                          std::to_string(der_bus));

  const VarId beta = w1.beta.at(der_bus);
  const VarId gamma = w1.gamma.at(der_bus);
  const std::string es = " b" + std::to_string(der_bus) + " t" +
                         std::to_string(t);

  // which segments can hold p_avail for some admissible breakpoints:
  // p1 spans [0.4, 0.8] p_max and p2 spans [0.5, 1.0] p_max
  const bool can1 = p_avail <= 0.8 * p_max;
  const bool can2 = p_avail >= 0.4 * p_max;
  const bool can3 = p_avail >= 0.5 * p_max;
  auto make_delta = [&](bool can, bool forced, int k) {
    const std::string role = "seg d" + std::to_string(k) + es;
    if (!can) return model.add_fixed_binary(false, role);
    if (forced) return model.add_fixed_binary(true, role);
    return model.add_binary(role);
  };
  const VarId d1 = make_delta(can1, can1 && !can2 && !can3, 1);
  const VarId d2 = make_delta(can2, can2 && !can1 && !can3, 2);
  const VarId d3 = make_delta(can3, can3 && !can1 && !can2, 3);
  w2.der_delta[der_bus] = {d1, d2, d3};

  AffineExpr s;  // middle-segment value at the fixed injection
  s.terms = {{beta, p_avail}, {gamma, 1.0}};
  AffineExpr g;  // middle-segment value at rated power
  g.terms = {{beta, p_max}, {gamma, 1.0}};

  const AffineExpr m1 = gated(model, d1, AffineExpr::variable(gamma),
                              "wv_d1_gamma" + es, t, der_bus);
  const AffineExpr m2 = gated(model, d2, s, "wv_d2_mid" + es, t, der_bus);
  const AffineExpr m3 = gated(model, d3, g, "wv_d3_rated" + es, t, der_bus);

  model.add_constraint({{d1, 1.0}, {d2, 1.0}, {d3, 1.0}}, Sense::eq, 1.0,
                       "wattvar_pick_one", t, der_bus);

  // q = d2*(beta p + gamma) - d3*q_max
  {
    AffineExpr row = AffineExpr::variable(w2.q.at(der_bus));
    row += scaled(m2, -1.0);
    row.terms.emplace_back(d3, q_max);
    add_expr_row(model, row, Sense::eq, 0.0, "wattvar_q_def", t, der_bus);
  }
  // segment selection in slope/intercept space:
  // d3*(gamma + beta p_max) - d2*q_max <= beta p + gamma <= d1*gamma - d3*q_max
  {
    AffineExpr row = m3;
    row.terms.emplace_back(d2, -q_max);
    row += scaled(s, -1.0);
    add_expr_row(model, row, Sense::le, 0.0, "wattvar_seg_lo", t, der_bus);
  }
  {
    AffineExpr row = s;
    row += scaled(m1, -1.0);
    row.terms.emplace_back(d3, q_max);
    add_expr_row(model, row, Sense::le, 0.0, "wattvar_seg_hi", t, der_bus);
  }

  if (t == 0) {
    // standard's box on the curve parameters, shared across instances
    model.add_constraint({{gamma, 1.0}, {beta, 0.4 * p_max}}, Sense::ge, 0.0,
                         "curve_box_p1_lo", -1, der_bus);
    model.add_constraint({{gamma, 1.0}, {beta, 0.8 * p_max}}, Sense::le, 0.0,
                         "curve_box_p1_hi", -1, der_bus);
    model.add_constraint({{gamma, 1.0}, {beta, p_max}}, Sense::le, -q_max,
                         "curve_box_p2_hi", -1, der_bus);
    model.add_constraint({{beta, 0.1 * p_max}}, Sense::ge, -q_max,
                         "curve_box_slope", -1, der_bus);
  }
}

void encode_radiality(MipModel& model, const Feeder& feeder,
                      const Omega1Layout& w1, const VirtualFlowLayout& flows) {
  const int n = feeder.n_nonsub();
  const auto switches = feeder.switch_edges();
  const int fixed_count = feeder.n_edges() - static_cast<int>(switches.size());
  const int closures = n - fixed_count;
  if (closures < 0 || closures > static_cast<int>(switches.size())) {
    throw mip::ModelError(
        "no radial configuration exists: need " + std::to_string(closures) +
        " closed switches out of " + std::to_string(switches.size()));
  }

  for (int i = 1; i < feeder.n_buses(); ++i) {
    std::vector<std::pair<VarId, double>> terms;
    for (const Edge& e : feeder.edges) {
      if (e.from == i) terms.emplace_back(flows.f.at(e.id), 1.0);
      else if (e.to == i) terms.emplace_back(flows.f.at(e.id), -1.0);
    }
    model.add_constraint(std::move(terms), Sense::eq, 1.0, "radiality_flow",
                         -1, i);
  }
  const double big = static_cast<double>(n);
  for (int e : switches) {
    const VarId y = w1.y.at(e);
    model.add_constraint({{flows.f.at(e), 1.0}, {y, -big}}, Sense::le, 0.0,
                         "radiality_gate_hi", -1, e);
    model.add_constraint({{flows.f.at(e), 1.0}, {y, big}}, Sense::ge, 0.0,
                         "radiality_gate_lo", -1, e);
  }
  std::vector<std::pair<VarId, double>> count;
  for (int e : switches) count.emplace_back(w1.y.at(e), 1.0);
  model.add_constraint(std::move(count), Sense::eq,
                       static_cast<double>(closures), "radiality_count");
}

void encode_local_regulator(MipModel& model, const Feeder& feeder, int edge_id,
                            Omega2Layout& w2, int t,
                            const EncodeOptions& opts) {
  const Edge& e = feeder.edges[static_cast<size_t>(edge_id)];
  if (e.kind != EdgeKind::local_regulator || !e.reg)
    throw mip::ModelError("edge is not a local regulator");
  const double band_lo = e.reg->band_low;
  const double band_hi = e.reg->band_high;
  if (band_hi <= opts.v_extreme_low || band_lo >= opts.v_extreme_high) {
    throw mip::ModelError("regulator band outside the voltage range on edge " +
                          std::to_string(edge_id));
  }
  const double thr_lo = band_lo / 1.1;   // below: taps maxed high
  const double thr_hi = band_hi / 0.9;   // above: taps maxed low
  const double mid = e.reg->band_mid();

  const AffineExpr vi = bus_voltage(feeder, w2, e.from);
  const AffineExpr vj = bus_voltage(feeder, w2, e.to);
  const auto [vi_lo, vi_hi] = bus_voltage_box(feeder, e.from);

  const bool can1 = vi_lo <= thr_lo && vi_hi >= opts.v_extreme_low;
  const bool can2 = vi_lo <= thr_hi && vi_hi >= thr_lo;
  const bool can3 = vi_hi >= thr_hi && vi_lo <= opts.v_extreme_high;
  if (!can1 && !can2 && !can3) {
    throw mip::ModelError(
        "primary voltage range incompatible with regulator bands on edge " +
        std::to_string(edge_id));
  }
  const std::string es = " e" + std::to_string(edge_id) + " t" +
                         std::to_string(t);
  auto make_delta = [&](bool can, bool forced, int k) {
    const std::string role = "reg d" + std::to_string(k) + es;
    if (!can) return model.add_fixed_binary(false, role);
    if (forced) return model.add_fixed_binary(true, role);
    return model.add_binary(role);
  };
  const VarId d1 = make_delta(can1, can1 && !can2 && !can3, 1);
  const VarId d2 = make_delta(can2, can2 && !can1 && !can3, 2);
  const VarId d3 = make_delta(can3, can3 && !can1 && !can2, 3);
  w2.reg_delta[edge_id] = {d1, d2, d3};

  model.add_constraint({{d1, 1.0}, {d2, 1.0}, {d3, 1.0}}, Sense::eq, 1.0,
                       "locreg_pick_one", t, edge_id);
  {
    AffineExpr row = vi;
    row.terms.emplace_back(d1, -opts.v_extreme_low);
    row.terms.emplace_back(d2, -thr_lo);
    row.terms.emplace_back(d3, -thr_hi);
    add_expr_row(model, row, Sense::ge, 0.0, "locreg_gate_lo", t, edge_id);
  }
  {
    AffineExpr row = vi;
    row.terms.emplace_back(d1, -thr_lo);
    row.terms.emplace_back(d2, -thr_hi);
    row.terms.emplace_back(d3, -opts.v_extreme_high);
    add_expr_row(model, row, Sense::le, 0.0, "locreg_gate_hi", t, edge_id);
  }
  const AffineExpr m1 = gated(model, d1, vi, "lr_d1_vi" + es, t, edge_id);
  const AffineExpr m3 = gated(model, d3, vi, "lr_d3_vi" + es, t, edge_id);
  {
    AffineExpr row = vj;
    row += scaled(m1, -1.1);
    row.terms.emplace_back(d2, -mid);
    row += scaled(m3, -0.9);
    add_expr_row(model, row, Sense::eq, 0.0, "locreg_secondary", t, edge_id);
  }
}

void encode_remote_regulator(MipModel& model, const Feeder& feeder,
                             int edge_id, const Omega1Layout& w1,
                             const Omega2Layout& w2, int t) {
  const Edge& e = feeder.edges[static_cast<size_t>(edge_id)];
  if (e.kind != EdgeKind::remote_regulator)
    throw mip::ModelError("edge is not a remote regulator");
  const auto& bits = w1.tap_bits.at(edge_id);
  const AffineExpr vi = bus_voltage(feeder, w2, e.from);
  const AffineExpr vj = bus_voltage(feeder, w2, e.to);

  AffineExpr row = vj;
  row += scaled(vi, -0.9);
  for (int k = 0; k < 6; ++k) {
    const AffineExpr mk = gated(
        model, bits[static_cast<size_t>(k)], vi,
        "rr_bit" + std::to_string(k) + "_vi e" + std::to_string(edge_id) +
            " t" + std::to_string(t),
        t, edge_id);
    row += scaled(mk, -0.00625 * std::pow(2.0, k));
  }
  add_expr_row(model, row, Sense::eq, 0.0, "remreg_secondary", t, edge_id);
}

DnrAssembly assemble_dnr(const Feeder& feeder, const ScenarioSet& scenarios,
                         const EncodeOptions& opts) {
  feeder.validate();
  if (scenarios.instances.empty())
    throw mip::ModelError("scenario set is empty");
  if (opts.tangents < 2)
    throw mip::ModelError("need at least 2 tangents per loss term");

  DnrAssembly asmb;
  asmb.options = opts;
  MipModel& model = asmb.model;

  asmb.omega1 = allocate_omega1(model, feeder);
  for (const Edge& e : feeder.edges) {
    asmb.flows.f[e.id] = model.add_continuous(
        -static_cast<double>(feeder.n_nonsub()),
        static_cast<double>(feeder.n_nonsub()),
        "virtual flow f e" + std::to_string(e.id));
  }
  encode_radiality(model, feeder, asmb.omega1, asmb.flows);

  for (int t = 0; t < scenarios.size(); ++t) {
    const InstanceData& inst = scenarios.instances[static_cast<size_t>(t)];
    if (inst.p_scale.size() != feeder.n_buses())
      throw mip::ModelError("instance data size mismatch");
    Omega2Layout w2 = allocate_omega2(model, feeder, inst, t);
    encode_network(model, feeder, asmb.omega1, w2, t);
    encode_zip(model, feeder, w2, inst, t);
    for (int b : feeder.der_buses()) {
      encode_wattvar(model, feeder, b, asmb.omega1, w2, inst.p_avail(b), t);
    }
    for (const Edge& e : feeder.edges) {
      if (e.kind == EdgeKind::local_regulator) {
        encode_local_regulator(model, feeder, e.id, w2, t, opts);
      } else if (e.kind == EdgeKind::remote_regulator) {
        encode_remote_regulator(model, feeder, e.id, asmb.omega1, w2, t);
      }
    }
    // tangent epigraph of the ohmic losses on non-regulator edges
    for (const Edge& e : feeder.edges) {
      if (e.is_regulator() || e.r <= 0.0) continue;
      const VarId lp = mip::convex_loss_epigraph(
          model, w2.flow_p.at(e.id), e.r, opts.tangents,
          "loss_p e" + std::to_string(e.id) + " t" + std::to_string(t), t,
          e.id);
      const VarId lq = mip::convex_loss_epigraph(
          model, w2.flow_q.at(e.id), e.r, opts.tangents,
          "loss_q e" + std::to_string(e.id) + " t" + std::to_string(t), t,
          e.id);
      model.add_objective_term(lp, 1.0);
      model.add_objective_term(lq, 1.0);
      model.mark_epigraph(lp);
      model.mark_epigraph(lq);
      w2.loss_p[e.id] = lp;
      w2.loss_q[e.id] = lq;
      asmb.tangent_bound +=
          mip::epigraph_error_bound(e.r, e.p_lim, opts.tangents) +
          mip::epigraph_error_bound(e.r, e.q_lim, opts.tangents);
    }
    asmb.omega2.push_back(std::move(w2));
  }

  // branching preferences: topology first, then high-order tap bits, then
  // the per-instance segment indicators
  asmb.branch_priority.assign(static_cast<size_t>(model.num_vars()), 1000);
  for (const auto& [e, y] : asmb.omega1.y)
    asmb.branch_priority[static_cast<size_t>(y)] = 0;
  for (const auto& [e, bits] : asmb.omega1.tap_bits) {
    for (int k = 0; k < 6; ++k) {
      asmb.branch_priority[static_cast<size_t>(bits[static_cast<size_t>(k)])] =
          10 + (5 - k);
    }
  }
  for (const Omega2Layout& w2 : asmb.omega2) {
    for (const auto& [b, d] : w2.der_delta)
      for (VarId v : d) asmb.branch_priority[static_cast<size_t>(v)] = 100;
    for (const auto& [e, d] : w2.reg_delta)
      for (VarId v : d) asmb.branch_priority[static_cast<size_t>(v)] = 100;
  }

  model.validate();
  return asmb;
}

}  // namespace dnr::encode
