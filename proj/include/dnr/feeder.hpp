#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "dnr/common.hpp"

namespace dnr {

enum class BusKind { substation, load, der, passive };
enum class EdgeKind { line, sw, local_regulator, remote_regulator };

/// Linearized voltage-dependent load. The four components of (alpha0 +
/// v*alpha12) are the lower/upper active and lower/upper reactive injection
/// bounds, in that order: [p_lo, p_hi, q_lo, q_hi]. A load with equal
/// lower/upper rows is inelastic.
struct ZipLoad {
  Eigen::Vector4d alpha0 = Eigen::Vector4d::Zero();
  Eigen::Vector4d alpha12 = Eigen::Vector4d::Zero();

  bool inelastic() const {
    return alpha0(0) == alpha0(1) && alpha12(0) == alpha12(1) &&
           alpha0(2) == alpha0(3) && alpha12(2) == alpha12(3);
  }
  double p_lo(double v) const { return alpha0(0) + v * alpha12(0); }
  double p_hi(double v) const { return alpha0(1) + v * alpha12(1); }
  double q_lo(double v) const { return alpha0(2) + v * alpha12(2); }
  double q_hi(double v) const { return alpha0(3) + v * alpha12(3); }

  /// Builds an inelastic load from raw quadratic coefficients
  /// p(v) = a0 + a1 v + a2 v^2 (and likewise for q), linearizing the
  /// quadratic term around nominal voltage as v^2 ~ 2v - 1.
  static ZipLoad from_quadratic(const Eigen::Vector3d& p_coeffs,
                                const Eigen::Vector3d& q_coeffs);
};

struct DerSpec {
  double p_max = 0.0;  ///< rated active power, pu
  double q_max = 0.0;  ///< rated reactive capacity, pu (absorption only)
};

struct Bus {
  int id = -1;
  BusKind kind = BusKind::passive;
  std::optional<ZipLoad> zip;
  std::optional<DerSpec> der;
  double v_min = 0.9;
  double v_max = 1.1;
};

struct RegulatorSpec {
  bool remote = false;
  // secondary-voltage band, local mode only
  double band_low = 0.0;
  double band_high = 0.0;

  double band_mid() const { return 0.5 * (band_low + band_high); }
};

struct Edge {
  int id = -1;
  int from = -1;  ///< origin bus
  int to = -1;    ///< destination bus
  EdgeKind kind = EdgeKind::line;
  double r = 0.0;
  double x = 0.0;
  double p_lim = 1.0;  ///< symmetric active flow bound, |P| <= p_lim
  double q_lim = 1.0;  ///< symmetric reactive flow bound
  std::optional<RegulatorSpec> reg;

  bool is_switch() const { return kind == EdgeKind::sw; }
  bool is_regulator() const {
    return kind == EdgeKind::local_regulator ||
           kind == EdgeKind::remote_regulator;
  }
};

/// Single-phase feeder graph. Bus ids are dense 0..N with the substation at
/// id 0; edge ids are dense 0..|E|-1. Immutable after construction.
struct Feeder {
  std::string name;
  std::vector<Bus> buses;
  std::vector<Edge> edges;
  double v0 = 1.0;

  int n_buses() const { return static_cast<int>(buses.size()); }
  int n_nonsub() const { return n_buses() - 1; }
  int n_edges() const { return static_cast<int>(edges.size()); }

  std::vector<int> switch_edges() const;
  std::vector<int> fixed_edges() const;  ///< everything that is not a switch
  std::vector<int> der_buses() const;
  std::vector<int> load_buses() const;

  /// Total nominal spot load (sum over load buses of consumption at v=1,
  /// using the upper active row), in pu. Positive number.
  double total_nominal_load() const;

  /// Throws ValidationError unless all structural invariants hold.
  void validate() const;

  /// Non-fatal oddities, e.g. a regulator band wider than the usual
  /// 0.0125..0.025 pu regulation range.
  std::vector<std::string> warnings() const;
};

/// Reduced branch-bus incidence matrix: row per edge with +1 at the origin
/// and -1 at the destination, substation column dropped. Shape |E| x N.
Eigen::MatrixXd reduced_incidence(const Feeder& feeder);

/// Full incidence including the substation column, shape |E| x (N+1).
Eigen::MatrixXd full_incidence(const Feeder& feeder);

}  // namespace dnr
