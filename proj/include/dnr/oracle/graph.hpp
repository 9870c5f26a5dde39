#pragma once

#include <cstdint>
#include <vector>

#include "dnr/feeder.hpp"

namespace dnr::oracle {

/// Switch assignment: one bit per switch edge, ordered by ascending switch
/// edge id (the order of Feeder::switch_edges()).
using SwitchAssignment = std::vector<bool>;

/// Set of closed edge ids implied by an assignment: all non-switch edges
/// plus the switches whose bit is set.
std::vector<int> closed_edges(const Feeder& feeder,
                              const SwitchAssignment& y);

/// True iff the closed subgraph is connected over all N+1 nodes (disjoint
/// set union) and has exactly N edges.
bool is_spanning_tree(const Feeder& feeder, const SwitchAssignment& y);

bool is_connected_subgraph(const Feeder& feeder, const SwitchAssignment& y);

/// Connectivity decided algebraically: the unit-injection flow equation on
/// the closed subgraph's reduced incidence matrix has a solution iff
/// rank(A_sub^T) == rank([A_sub^T | 1]). Rank via column-pivoted QR with
/// threshold 1e-9 * max column norm.
bool prop1_feasible(const Feeder& feeder, const SwitchAssignment& y);

struct TopologyEnumeration {
  std::vector<SwitchAssignment> trees;
  int count() const { return static_cast<int>(trees.size()); }
};

/// All spanning-tree switch assignments, by exhaustive enumeration.
/// Guarded at 24 switches.
TopologyEnumeration enumerate_radial(const Feeder& feeder);

/// Spanning-tree count of the fully-closed graph via the matrix-tree
/// determinant, rounded to the nearest integer.
std::int64_t count_spanning_trees_matrix_tree(const Feeder& feeder);

}  // namespace dnr::oracle
