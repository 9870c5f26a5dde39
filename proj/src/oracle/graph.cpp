#include "dnr/oracle/graph.hpp"

#include <Eigen/QR>
#include <cmath>

namespace dnr::oracle {

std::vector<int> closed_edges(const Feeder& feeder,
                              const SwitchAssignment& y) {
  const auto switches = feeder.switch_edges();
  if (y.size() != switches.size())
    throw Error("switch assignment length mismatch");
  std::vector<int> closed;
  size_t s = 0;
  for (const Edge& e : feeder.edges) {
    if (e.is_switch()) {
      if (y[s++]) closed.push_back(e.id);
    } else {
      closed.push_back(e.id);
    }
  }
  return closed;
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

int rank_with_threshold(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0;
  double max_col_norm = 0.0;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    max_col_norm = std::max(max_col_norm, m.col(c).norm());
  if (max_col_norm == 0.0) return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(1e-9 * max_col_norm);
  return static_cast<int>(qr.rank());
}

}  // namespace

bool is_connected_subgraph(const Feeder& feeder, const SwitchAssignment& y) {
  UnionFind uf(feeder.n_buses());
  int components = feeder.n_buses();
  for (int e : closed_edges(feeder, y)) {
    const Edge& ed = feeder.edges[static_cast<size_t>(e)];
    if (uf.unite(ed.from, ed.to)) --components;
  }
  return components == 1;
}

bool is_spanning_tree(const Feeder& feeder, const SwitchAssignment& y) {
  const auto closed = closed_edges(feeder, y);
  return static_cast<int>(closed.size()) == feeder.n_nonsub() &&
         is_connected_subgraph(feeder, y);
}

bool prop1_feasible(const Feeder& feeder, const SwitchAssignment& y) {
  const auto closed = closed_edges(feeder, y);
  const int n = feeder.n_nonsub();
  Eigen::MatrixXd at(n, static_cast<Eigen::Index>(closed.size()));
  at.setZero();
  for (size_t k = 0; k < closed.size(); ++k) {
    const Edge& ed = feeder.edges[static_cast<size_t>(closed[k])];
    if (ed.from != 0) at(ed.from - 1, static_cast<Eigen::Index>(k)) = 1.0;
    if (ed.to != 0) at(ed.to - 1, static_cast<Eigen::Index>(k)) = -1.0;
  }
  Eigen::MatrixXd augmented(n, at.cols() + 1);
  augmented << at, Eigen::VectorXd::Ones(n);
  return rank_with_threshold(at) == rank_with_threshold(augmented);
}

TopologyEnumeration enumerate_radial(const Feeder& feeder) {
  const auto switches = feeder.switch_edges();
  const size_t s = switches.size();
  if (s > 24) throw Error("enumerate_radial: more than 24 switches");
  TopologyEnumeration out;
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    SwitchAssignment y(s);
    for (size_t k = 0; k < s; ++k) y[k] = (mask >> k) & 1u;
    if (is_spanning_tree(feeder, y)) out.trees.push_back(std::move(y));
  }
  return out;
}

std::int64_t count_spanning_trees_matrix_tree(const Feeder& feeder) {
  const Eigen::MatrixXd a = reduced_incidence(feeder);
  const Eigen::MatrixXd laplacian = a.transpose() * a;
  const double det = laplacian.determinant();
  return static_cast<std::int64_t>(std::llround(det));
}

}  // namespace dnr::oracle
