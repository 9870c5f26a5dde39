#include "dnr/feeder.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

namespace dnr {

ZipLoad ZipLoad::from_quadratic(const Eigen::Vector3d& p_coeffs,
                                const Eigen::Vector3d& q_coeffs) {
  ZipLoad z;
  const double pc = p_coeffs(0) - p_coeffs(2);
  const double pv = p_coeffs(1) + 2.0 * p_coeffs(2);
  const double qc = q_coeffs(0) - q_coeffs(2);
  const double qv = q_coeffs(1) + 2.0 * q_coeffs(2);
  z.alpha0 << pc, pc, qc, qc;
  z.alpha12 << pv, pv, qv, qv;
  return z;
}

std::vector<int> Feeder::switch_edges() const {
  std::vector<int> out;
  for (const Edge& e : edges)
    if (e.is_switch()) out.push_back(e.id);
  return out;
}

std::vector<int> Feeder::fixed_edges() const {
  std::vector<int> out;
  for (const Edge& e : edges)
    if (!e.is_switch()) out.push_back(e.id);
  return out;
}

std::vector<int> Feeder::der_buses() const {
  std::vector<int> out;
  for (const Bus& b : buses)
    if (b.kind == BusKind::der) out.push_back(b.id);
  return out;
}

std::vector<int> Feeder::load_buses() const {
  std::vector<int> out;
  for (const Bus& b : buses)
    if (b.kind == BusKind::load) out.push_back(b.id);
  return out;
}

double Feeder::total_nominal_load() const {
  double total = 0.0;
  for (const Bus& b : buses) {
    if (b.zip) total += -b.zip->p_hi(1.0);
  }
  return total;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

void Feeder::validate() const {
  if (buses.empty()) throw ValidationError("feeder has no buses");
  for (int i = 0; i < n_buses(); ++i) {
    const Bus& b = buses[static_cast<size_t>(i)];
    if (b.id != i) {
      throw ValidationError("bus ids must be dense 0..N; found id " +
                            std::to_string(b.id) + " at position " +
                            std::to_string(i));
    }
    if ((b.kind == BusKind::substation) != (i == 0)) {
      throw ValidationError(
          "exactly one substation with id 0 is supported; model additional "
          "feeds by appending a virtual bus connected to every substation "
          "and using that as bus 0");
    }
    if (!(b.v_min < b.v_max)) {
      throw ValidationError("bus " + std::to_string(i) +
                            ": v_min must be below v_max");
    }
    if (b.zip && b.der) {
      throw ValidationError(
          "bus " + std::to_string(i) +
          " carries both a load and a DER; split it into single-device buses "
          "joined by zero-impedance lines");
    }
    if (b.kind == BusKind::load && !b.zip)
      throw ValidationError("load bus " + std::to_string(i) + " has no load");
    if (b.kind == BusKind::der && !b.der)
      throw ValidationError("der bus " + std::to_string(i) + " has no DER");
    if (b.kind == BusKind::passive && (b.zip || b.der))
      throw ValidationError("passive bus " + std::to_string(i) +
                            " carries a device");
    if (b.der && (b.der->p_max <= 0.0 || b.der->q_max <= 0.0)) {
      throw ValidationError("bus " + std::to_string(i) +
                            ": DER ratings must be positive");
    }
    if (b.zip) {
      // lower rows must stay below upper rows across the plausible range
      for (double v : {0.8, 1.2}) {
        if (b.zip->p_lo(v) > b.zip->p_hi(v) + 1e-12 ||
            b.zip->q_lo(v) > b.zip->q_hi(v) + 1e-12) {
          throw ValidationError("bus " + std::to_string(i) +
                                ": load bounds cross within v in [0.8, 1.2]");
        }
      }
    }
  }

  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < n_edges(); ++e) {
    const Edge& ed = edges[static_cast<size_t>(e)];
    if (ed.id != e) {
      throw ValidationError("edge ids must be dense 0..|E|-1");
    }
    if (ed.from < 0 || ed.from >= n_buses() || ed.to < 0 ||
        ed.to >= n_buses() || ed.from == ed.to) {
      throw ValidationError("edge " + std::to_string(e) +
                            " has invalid endpoints");
    }
    if (!seen.insert({ed.from, ed.to}).second) {
      throw ValidationError("duplicate edge (" + std::to_string(ed.from) +
                            "," + std::to_string(ed.to) + ")");
    }
    if (seen.count({ed.to, ed.from})) {
      throw ValidationError("antiparallel pair (" + std::to_string(ed.from) +
                            "," + std::to_string(ed.to) + ") and (" +
                            std::to_string(ed.to) + "," +
                            std::to_string(ed.from) + ") is not allowed");
    }
    if (ed.r < 0.0 || ed.x < 0.0) {
      throw ValidationError("edge " + std::to_string(e) +
                            " has negative impedance");
    }
    if (ed.p_lim <= 0.0 || ed.q_lim <= 0.0) {
      throw ValidationError("edge " + std::to_string(e) +
                            " needs positive flow limits");
    }
    if (ed.is_regulator()) {
      if (!ed.reg) {
        throw ValidationError("regulator edge " + std::to_string(e) +
                              " lacks its parameters");
      }
      if (ed.r != 0.0 || ed.x != 0.0) {
        throw ValidationError("regulator edge " + std::to_string(e) +
                              " must be ideal (r = x = 0); model copper "
                              "losses as a series line");
      }
      const bool remote = ed.kind == EdgeKind::remote_regulator;
      if (ed.reg->remote != remote) {
        throw ValidationError("edge " + std::to_string(e) +
                              ": regulator mode disagrees with edge kind");
      }
      if (!remote) {
        if (!(ed.reg->band_low < ed.reg->band_high)) {
          throw ValidationError("edge " + std::to_string(e) +
                                ": malformed regulator band");
        }
      }
    } else if (ed.reg) {
      throw ValidationError("non-regulator edge " + std::to_string(e) +
                            " carries regulator parameters");
    }
  }

  UnionFind uf(n_buses());
  int components = n_buses();
  for (const Edge& ed : edges) {
    if (uf.unite(ed.from, ed.to)) --components;
  }
  if (components != 1) {
    throw ValidationError(
        "feeder graph is disconnected even with all switches closed");
  }
}

std::vector<std::string> Feeder::warnings() const {
  std::vector<std::string> out;
  for (const Edge& ed : edges) {
    if (ed.kind != EdgeKind::local_regulator || !ed.reg) continue;
    const double width = ed.reg->band_high - ed.reg->band_low;
    if (width < 0.0125 - 1e-12 || width > 0.025 + 1e-12) {
      out.push_back("edge " + std::to_string(ed.id) + ": regulator band width " +
                    std::to_string(width) +
                    " pu is outside the usual 0.0125..0.025 pu range");
    }
  }
  return out;
}

Eigen::MatrixXd full_incidence(const Feeder& feeder) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(feeder.n_edges(), feeder.n_buses());
  for (const Edge& e : feeder.edges) {
    a(e.id, e.from) = 1.0;
    a(e.id, e.to) = -1.0;
  }
  return a;
}

Eigen::MatrixXd reduced_incidence(const Feeder& feeder) {
  return full_incidence(feeder).rightCols(feeder.n_nonsub());
}

}  // namespace dnr
