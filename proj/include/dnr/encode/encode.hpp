#pragma once

#include <array>
#include <map>
#include <vector>

#include "dnr/curve.hpp"
#include "dnr/feeder.hpp"
#include "dnr/mip/linearize.hpp"
#include "dnr/mip/model.hpp"
#include "dnr/scenario.hpp"

namespace dnr::encode {

struct EncodeOptions {
  int tangents = 15;
  /// Outer primary-voltage range used by the local-regulator region gates.
  double v_extreme_low = 0.8;
  double v_extreme_high = 1.2;
};

/// First-stage variables, shared by every operating instance.
struct Omega1Layout {
  std::map<int, mip::VarId> y;           ///< switch edge id -> closure binary
  std::map<int, mip::VarId> beta;        ///< DER bus id -> curve slope
  std::map<int, mip::VarId> gamma;       ///< DER bus id -> curve intercept
  std::map<int, std::array<mip::VarId, 6>> tap_bits;  ///< remote reg edge id
};

/// Per-instance operating state. p entries exist for load and DER buses;
/// DER active power is a fixed variable pinned to the instance availability.
struct Omega2Layout {
  int t = -1;
  std::map<int, mip::VarId> v;  ///< bus id 1..N
  std::map<int, mip::VarId> p;
  std::map<int, mip::VarId> q;
  std::map<int, mip::VarId> flow_p;  ///< edge id -> P
  std::map<int, mip::VarId> flow_q;  ///< edge id -> Q
  std::map<int, std::array<mip::VarId, 3>> der_delta;
  std::map<int, std::array<mip::VarId, 3>> reg_delta;
  std::map<int, mip::VarId> loss_p;  ///< edge id -> epigraph of r*P^2
  std::map<int, mip::VarId> loss_q;
};

/// Connectivity certificate flows; a single set independent of t.
struct VirtualFlowLayout {
  std::map<int, mip::VarId> f;
};

Omega1Layout allocate_omega1(mip::MipModel& model, const Feeder& feeder);

Omega2Layout allocate_omega2(mip::MipModel& model, const Feeder& feeder,
                             const InstanceData& inst, int t);

/// Injection balance per bus, exact drop on fixed lines, gated drop and
/// gated flow caps on switches. Regulator edges get no drop equation here.
void encode_network(mip::MipModel& model, const Feeder& feeder,
                    const Omega1Layout& w1, const Omega2Layout& w2, int t);

/// Voltage-dependent load rows, scaled by the instance load factors;
/// inelastic loads become equalities.
void encode_zip(mip::MipModel& model, const Feeder& feeder,
                const Omega2Layout& w2, const InstanceData& inst, int t);

/// Watt-var rule for one DER: segment pick binaries (recorded in w2),
/// the gated q definition, segment-selection rows in slope/intercept space,
/// and (once, at t==0) the standard's box on the curve parameters.
void encode_wattvar(mip::MipModel& model, const Feeder& feeder, int der_bus,
                    const Omega1Layout& w1, Omega2Layout& w2, double p_avail,
                    int t);

/// Connectivity via virtual unit-injection flows plus the closed-edge count
/// row. Flow variables appear nowhere else and carry no objective.
void encode_radiality(mip::MipModel& model, const Feeder& feeder,
                      const Omega1Layout& w1, const VirtualFlowLayout& flows);

void encode_local_regulator(mip::MipModel& model, const Feeder& feeder,
                            int edge_id, Omega2Layout& w2, int t,
                            const EncodeOptions& opts);

/// Tap-ratio row with the 6-bit shared tap encoding; the 33-position cap row
/// is added by allocate_omega1.
void encode_remote_regulator(mip::MipModel& model, const Feeder& feeder,
                             int edge_id, const Omega1Layout& w1,
                             const Omega2Layout& w2, int t);

struct DnrAssembly {
  mip::MipModel model;
  Omega1Layout omega1;
  std::vector<Omega2Layout> omega2;
  VirtualFlowLayout flows;
  EncodeOptions options;
  /// Total worst-case underestimation of the tangent objective vs the true
  /// quadratic losses, summed over all loss terms and instances.
  double tangent_bound = 0.0;
  /// Branching preference per variable (lower first); see solve::BnbOptions.
  std::vector<int> branch_priority;
};

/// Builds the full multi-instance reconfiguration model: shared topology,
/// curves and taps, per-instance physics, and the tangent-epigraph loss
/// objective over non-regulator edges.
DnrAssembly assemble_dnr(const Feeder& feeder, const ScenarioSet& scenarios,
                         const EncodeOptions& opts = {});

}  // namespace dnr::encode
