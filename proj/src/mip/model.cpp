#include "dnr/mip/model.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace dnr::mip {

VarId MipModel::add_continuous(double lower, double upper, std::string role) {
  if (!(lower <= upper)) {
    throw ModelError("variable '" + role + "': lower bound " +
                     std::to_string(lower) + " exceeds upper " +
                     std::to_string(upper));
  }
  vars_.push_back(Variable{VarKind::continuous, lower, upper, std::move(role)});
  return static_cast<VarId>(vars_.size() - 1);
}

VarId MipModel::add_binary(std::string role) {
  vars_.push_back(Variable{VarKind::binary, 0.0, 1.0, std::move(role)});
  return static_cast<VarId>(vars_.size() - 1);
}

VarId MipModel::add_fixed_binary(bool value, std::string role) {
  const double v = value ? 1.0 : 0.0;
  vars_.push_back(Variable{VarKind::binary, v, v, std::move(role)});
  return static_cast<VarId>(vars_.size() - 1);
}

RowId MipModel::add_constraint(std::vector<std::pair<VarId, double>> terms,
                               Sense sense, double rhs, std::string role, int t,
                               int entity) {
  for (const auto& [v, c] : terms) {
    check_var(v);
    if (!std::isfinite(c)) {
      throw ModelError("row '" + role + "': non-finite coefficient");
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // merge duplicates in place
  std::vector<std::pair<VarId, double>> merged;
  merged.reserve(terms.size());
  for (const auto& [v, c] : terms) {
    if (!merged.empty() && merged.back().first == v) {
      merged.back().second += c;
    } else {
      merged.emplace_back(v, c);
    }
  }
  std::erase_if(merged, [](const auto& p) { return p.second == 0.0; });
  cons_.push_back(LinearConstraint{std::move(merged), sense, rhs,
                                   std::move(role), t, entity});
  return static_cast<RowId>(cons_.size() - 1);
}

void MipModel::add_objective_term(VarId v, double coeff) {
  check_var(v);
  obj_.emplace_back(v, coeff);
}

void MipModel::fix_variable(VarId v, double value) {
  check_var(v);
  vars_[static_cast<size_t>(v)].lower = value;
  vars_[static_cast<size_t>(v)].upper = value;
}

void MipModel::set_bounds(VarId v, double lower, double upper) {
  check_var(v);
  if (!(lower <= upper)) {
    throw ModelError("set_bounds: empty interval for variable " +
                     std::to_string(v));
  }
  vars_[static_cast<size_t>(v)].lower = lower;
  vars_[static_cast<size_t>(v)].upper = upper;
}

void MipModel::check_var(VarId v) const {
  if (v < 0 || v >= static_cast<VarId>(vars_.size())) {
    throw ModelError("unknown variable id " + std::to_string(v));
  }
}

void MipModel::validate() const {
  for (size_t i = 0; i < vars_.size(); ++i) {
    const Variable& v = vars_[i];
    if (!(v.lower <= v.upper)) {
      throw ModelError("variable " + std::to_string(i) + " ('" + v.role +
                       "') has empty bound interval");
    }
    if (v.kind == VarKind::binary) {
      const bool lo_ok = v.lower == 0.0 || v.lower == 1.0;
      const bool hi_ok = v.upper == 0.0 || v.upper == 1.0;
      if (!lo_ok || !hi_ok) {
        throw ModelError("binary variable " + std::to_string(i) +
                         " has non-integral bounds");
      }
    }
  }
  for (size_t r = 0; r < cons_.size(); ++r) {
    const auto& row = cons_[r];
    VarId prev = -1;
    for (const auto& [v, c] : row.terms) {
      check_var(v);
      if (v <= prev) {
        throw ModelError("row " + std::to_string(r) + " has unsorted terms");
      }
      prev = v;
      (void)c;
    }
    if (!std::isfinite(row.rhs)) {
      throw ModelError("row " + std::to_string(r) + " has non-finite rhs");
    }
  }
  for (const auto& [v, c] : obj_) {
    check_var(v);
    (void)c;
  }
  for (VarId v : epigraph_vars_) check_var(v);
}

void MipModel::write_audit_csv(std::ostream& out) const {
  out << "row_id,role,t,entity\n";
  for (size_t r = 0; r < cons_.size(); ++r) {
    out << r << "," << cons_[r].role << "," << cons_[r].t << ","
        << cons_[r].entity << "\n";
  }
}

bool MipModel::operator==(const MipModel& other) const {
  if (vars_.size() != other.vars_.size() || cons_.size() != other.cons_.size())
    return false;
  for (size_t i = 0; i < vars_.size(); ++i) {
    const Variable& a = vars_[i];
    const Variable& b = other.vars_[i];
    if (a.kind != b.kind || a.lower != b.lower || a.upper != b.upper)
      return false;
  }
  for (size_t r = 0; r < cons_.size(); ++r) {
    const auto& a = cons_[r];
    const auto& b = other.cons_[r];
    if (a.sense != b.sense || a.rhs != b.rhs || a.terms != b.terms)
      return false;
  }
  auto norm_obj = [](const std::vector<std::pair<VarId, double>>& o) {
    std::vector<std::pair<VarId, double>> s(o);
    std::sort(s.begin(), s.end());
    std::vector<std::pair<VarId, double>> merged;
    for (const auto& [v, c] : s) {
      if (!merged.empty() && merged.back().first == v)
        merged.back().second += c;
      else
        merged.emplace_back(v, c);
    }
    std::erase_if(merged, [](const auto& p) { return p.second == 0.0; });
    return merged;
  };
  return norm_obj(obj_) == norm_obj(other.obj_) &&
         obj_offset_ == other.obj_offset_;
}

}  // namespace dnr::mip
