#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dnr/common.hpp"

namespace dnr::mip {

using VarId = std::int32_t;
using RowId = std::int32_t;

enum class VarKind { continuous, binary };

enum class Sense { le, eq, ge };

struct Variable {
  VarKind kind = VarKind::continuous;
  double lower = 0.0;
  double upper = 0.0;
  /// Role tag used by the audit dump, e.g. "v b12 t3" or "switch y e7".
  std::string role;
};

/// Row of the model. Terms are kept sorted by variable id with merged
/// coefficients, so a variable appears at most once per row.
struct LinearConstraint {
  std::vector<std::pair<VarId, double>> terms;
  Sense sense = Sense::eq;
  double rhs = 0.0;
  std::string role;
  int t = -1;       // scenario index, -1 when shared across instances
  int entity = -1;  // bus or edge id the row belongs to, -1 if none
};

struct ModelError : Error {
  using Error::Error;
};

/// Solver-agnostic mixed-integer model: variables with bounds, linear rows,
/// and a linear minimization objective. Building is single-writer; a finished
/// model is immutable and safe to share.
class MipModel {
 public:
  VarId add_continuous(double lower, double upper, std::string role);
  /// Binary variables carry integral bounds; [0,0] and [1,1] encode
  /// build-time fixings.
  VarId add_binary(std::string role);
  VarId add_fixed_binary(bool value, std::string role);

  RowId add_constraint(std::vector<std::pair<VarId, double>> terms, Sense sense,
                       double rhs, std::string role, int t = -1,
                       int entity = -1);

  void add_objective_term(VarId v, double coeff);
  void set_objective_offset(double offset) { obj_offset_ = offset; }
  void mark_epigraph(VarId v) { epigraph_vars_.push_back(v); }

  void fix_variable(VarId v, double value);
  void set_bounds(VarId v, double lower, double upper);

  const Variable& var(VarId v) const { return vars_.at(static_cast<size_t>(v)); }
  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<LinearConstraint>& constraints() const { return cons_; }
  const std::vector<std::pair<VarId, double>>& objective() const { return obj_; }
  const std::vector<VarId>& epigraph_vars() const { return epigraph_vars_; }
  double objective_offset() const { return obj_offset_; }

  int num_vars() const { return static_cast<int>(vars_.size()); }
  int num_constraints() const { return static_cast<int>(cons_.size()); }

  /// Checks referential integrity and bound sanity; throws ModelError.
  void validate() const;

  /// Per-row audit listing: id,role,t,entity as CSV.
  void write_audit_csv(std::ostream& out) const;

  bool operator==(const MipModel& other) const;

 private:
  void check_var(VarId v) const;

  std::vector<Variable> vars_;
  std::vector<LinearConstraint> cons_;
  std::vector<std::pair<VarId, double>> obj_;
  std::vector<VarId> epigraph_vars_;
  double obj_offset_ = 0.0;
};

}  // namespace dnr::mip
