#include "dnr/mip/mps.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

namespace dnr::mip {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit_entry(std::ostream& out, const std::string& indicator,
                const std::string& f2, const std::string& f3,
                const std::string& f4 = "", const std::string& f5 = "",
                const std::string& f6 = "") {
  char buf[160];
  std::snprintf(buf, sizeof(buf), " %-2s %-10s %-12s %-25s %-12s %-25s",
                indicator.c_str(), f2.c_str(), f3.c_str(), f4.c_str(),
                f5.c_str(), f6.c_str());
  std::string line(buf);
  while (!line.empty() && line.back() == ' ') line.pop_back();
  out << line << "\n";
}

}  // namespace

void write_mps(const MipModel& model, std::ostream& out,
               const std::string& name) {
  out << "NAME          " << name << "\n";
  out << "ROWS\n";
  emit_entry(out, "N", "COST", "");
  const auto& cons = model.constraints();
  for (size_t r = 0; r < cons.size(); ++r) {
    const char* s = cons[r].sense == Sense::le   ? "L"
                    : cons[r].sense == Sense::ge ? "G"
                                                 : "E";
    emit_entry(out, s, "c" + std::to_string(r), "");
  }

  // column-wise view of constraint coefficients
  const int n = model.num_vars();
  std::vector<std::vector<std::pair<size_t, double>>> cols(
      static_cast<size_t>(n));
  for (size_t r = 0; r < cons.size(); ++r) {
    for (const auto& [v, c] : cons[r].terms) {
      cols[static_cast<size_t>(v)].emplace_back(r, c);
    }
  }
  std::vector<double> obj(static_cast<size_t>(n), 0.0);
  for (const auto& [v, c] : model.objective()) obj[static_cast<size_t>(v)] += c;

  out << "COLUMNS\n";
  bool in_int = false;
  int marker_count = 0;
  for (int j = 0; j < n; ++j) {
    const Variable& var = model.var(j);
    const bool want_int = var.kind == VarKind::binary;
    if (want_int != in_int) {
      emit_entry(out, "", "MARK" + std::to_string(marker_count++), "'MARKER'",
                 "", want_int ? "'INTORG'" : "'INTEND'");
      in_int = want_int;
    }
    const std::string col = "x" + std::to_string(j);
    size_t emitted = 0;
    if (obj[static_cast<size_t>(j)] != 0.0) {
      emit_entry(out, "", col, "COST", fmt_value(obj[static_cast<size_t>(j)]));
      ++emitted;
    }
    for (const auto& [r, c] : cols[static_cast<size_t>(j)]) {
      emit_entry(out, "", col, "c" + std::to_string(r), fmt_value(c));
      ++emitted;
    }
    if (emitted == 0) {
      // keep otherwise-absent columns alive
      emit_entry(out, "", col, "COST", "0");
    }
  }
  if (in_int) {
    emit_entry(out, "", "MARK" + std::to_string(marker_count++), "'MARKER'",
               "", "'INTEND'");
  }

  out << "RHS\n";
  if (model.objective_offset() != 0.0) {
    emit_entry(out, "", "RHS", "COST", fmt_value(-model.objective_offset()));
  }
  for (size_t r = 0; r < cons.size(); ++r) {
    if (cons[r].rhs != 0.0) {
      emit_entry(out, "", "RHS", "c" + std::to_string(r),
                 fmt_value(cons[r].rhs));
    }
  }

  out << "BOUNDS\n";
  for (int j = 0; j < n; ++j) {
    const Variable& var = model.var(j);
    const std::string col = "x" + std::to_string(j);
    if (var.kind == VarKind::binary) {
      if (var.lower == var.upper) {
        emit_entry(out, "FX", "BND", col, fmt_value(var.lower));
      } else {
        emit_entry(out, "BV", "BND", col);
      }
      continue;
    }
    if (var.lower == var.upper) {
      emit_entry(out, "FX", "BND", col, fmt_value(var.lower));
      continue;
    }
    if (std::isinf(var.lower) && std::isinf(var.upper)) {
      emit_entry(out, "FR", "BND", col);
      continue;
    }
    if (std::isinf(var.lower)) {
      emit_entry(out, "MI", "BND", col);
    } else {
      emit_entry(out, "LO", "BND", col, fmt_value(var.lower));
    }
    if (std::isinf(var.upper)) {
      emit_entry(out, "PL", "BND", col);
    } else {
      emit_entry(out, "UP", "BND", col, fmt_value(var.upper));
    }
  }
  out << "ENDATA\n";
}

void write_mps_file(const MipModel& model, const std::string& path,
                    const std::string& name) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_mps(model, out, name);
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

struct RowInfo {
  Sense sense = Sense::eq;
  double rhs = 0.0;
  double range = 0.0;
  bool has_range = false;
  std::vector<std::pair<VarId, double>> terms;
};

}  // namespace

MipModel read_mps(std::istream& in) {
  enum class Section { none, rows, columns, rhs, ranges, bounds, done };
  Section section = Section::none;

  std::string obj_row_name;
  std::vector<std::string> row_order;
  std::map<std::string, RowInfo> rows;
  std::map<std::string, VarId> var_ids;
  std::vector<std::string> var_order;
  std::vector<VarKind> var_kind;
  std::vector<double> var_lo, var_hi;
  std::vector<bool> lo_set, hi_set;
  std::vector<std::pair<VarId, double>> objective;
  double obj_offset = 0.0;
  bool in_int = false;

  auto ensure_var = [&](const std::string& name) -> VarId {
    auto it = var_ids.find(name);
    if (it != var_ids.end()) return it->second;
    const VarId id = static_cast<VarId>(var_order.size());
    var_ids.emplace(name, id);
    var_order.push_back(name);
    var_kind.push_back(in_int ? VarKind::binary : VarKind::continuous);
    var_lo.push_back(in_int ? 0.0 : 0.0);
    var_hi.push_back(in_int ? 1.0 : kInf);
    lo_set.push_back(false);
    hi_set.push_back(false);
    return id;
  };

  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '*') continue;
    if (line[0] != ' ' && line[0] != '\t') {
      auto toks = tokenize(line);
      if (toks.empty()) continue;
      const std::string& key = toks[0];
      if (key == "NAME") {
        section = Section::none;
      } else if (key == "ROWS") {
        section = Section::rows;
      } else if (key == "COLUMNS") {
        section = Section::columns;
      } else if (key == "RHS") {
        section = Section::rhs;
      } else if (key == "RANGES") {
        section = Section::ranges;
      } else if (key == "BOUNDS") {
        section = Section::bounds;
      } else if (key == "ENDATA") {
        section = Section::done;
        break;
      } else {
        throw IoError("unknown MPS section '" + key + "'");
      }
      continue;
    }
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    switch (section) {
      case Section::rows: {
        if (toks.size() < 2) throw IoError("bad ROWS line: " + line);
        const std::string& type = toks[0];
        const std::string& rname = toks[1];
        if (type == "N") {
          if (obj_row_name.empty()) obj_row_name = rname;
        } else {
          RowInfo info;
          info.sense = type == "L" ? Sense::le
                       : type == "G" ? Sense::ge
                       : type == "E" ? Sense::eq
                                     : throw IoError("bad row type " + type);
          row_order.push_back(rname);
          rows.emplace(rname, info);
        }
        break;
      }
      case Section::columns: {
        if (toks.size() >= 3 && toks[1] == "'MARKER'") {
          if (toks[2] == "'INTORG'") in_int = true;
          else if (toks[2] == "'INTEND'") in_int = false;
          break;
        }
        if (toks.size() >= 5 && toks[2] == "'MARKER'") {
          // form: <name> 'MARKER' '' 'INTORG'
          const std::string& last = toks.back();
          if (last == "'INTORG'") in_int = true;
          else if (last == "'INTEND'") in_int = false;
          break;
        }
        if (toks.size() >= 3 && (toks.size() - 1) % 2 == 0) {
          const VarId v = ensure_var(toks[0]);
          for (size_t k = 1; k + 1 < toks.size(); k += 2) {
            const std::string& rname = toks[k];
            const double val = std::stod(toks[k + 1]);
            if (rname == obj_row_name) {
              if (val != 0.0) objective.emplace_back(v, val);
            } else {
              auto it = rows.find(rname);
              if (it == rows.end())
                throw IoError("COLUMNS references unknown row " + rname);
              it->second.terms.emplace_back(v, val);
            }
          }
        } else {
          throw IoError("bad COLUMNS line: " + line);
        }
        break;
      }
      case Section::rhs: {
        for (size_t k = 1; k + 1 < toks.size(); k += 2) {
          const std::string& rname = toks[k];
          const double val = std::stod(toks[k + 1]);
          if (rname == obj_row_name) {
            obj_offset = -val;
          } else {
            auto it = rows.find(rname);
            if (it == rows.end())
              throw IoError("RHS references unknown row " + rname);
            it->second.rhs = val;
          }
        }
        break;
      }
      case Section::ranges: {
        for (size_t k = 1; k + 1 < toks.size(); k += 2) {
          auto it = rows.find(toks[k]);
          if (it == rows.end())
            throw IoError("RANGES references unknown row " + toks[k]);
          it->second.range = std::stod(toks[k + 1]);
          it->second.has_range = true;
        }
        break;
      }
      case Section::bounds: {
        if (toks.size() < 3) throw IoError("bad BOUNDS line: " + line);
        const std::string& btype = toks[0];
        const VarId v = ensure_var(toks[2]);
        const size_t vi = static_cast<size_t>(v);
        const double val = toks.size() >= 4 ? std::stod(toks[3]) : 0.0;
        if (btype == "UP") {
          var_hi[vi] = val;
          hi_set[vi] = true;
          if (val < 0.0 && !lo_set[vi]) var_lo[vi] = -kInf;
        } else if (btype == "LO") {
          var_lo[vi] = val;
          lo_set[vi] = true;
        } else if (btype == "FX") {
          var_lo[vi] = var_hi[vi] = val;
          lo_set[vi] = hi_set[vi] = true;
        } else if (btype == "FR") {
          var_lo[vi] = -kInf;
          var_hi[vi] = kInf;
        } else if (btype == "MI") {
          var_lo[vi] = -kInf;
        } else if (btype == "PL") {
          var_hi[vi] = kInf;
        } else if (btype == "BV") {
          var_kind[vi] = VarKind::binary;
          var_lo[vi] = 0.0;
          var_hi[vi] = 1.0;
        } else if (btype == "UI") {
          var_kind[vi] = VarKind::binary;
          var_hi[vi] = val;
        } else if (btype == "LI") {
          var_kind[vi] = VarKind::binary;
          var_lo[vi] = val;
        } else {
          throw IoError("unsupported bound type " + btype);
        }
        break;
      }
      default:
        throw IoError("data line outside of a section: " + line);
    }
  }

  MipModel model;
  for (size_t j = 0; j < var_order.size(); ++j) {
    if (var_kind[j] == VarKind::binary) {
      if (var_lo[j] == var_hi[j]) {
        model.add_fixed_binary(var_lo[j] != 0.0, "");
      } else {
        model.add_binary("");
      }
    } else {
      model.add_continuous(var_lo[j], var_hi[j], "");
    }
  }
  for (const auto& rname : row_order) {
    const RowInfo& info = rows.at(rname);
    if (!info.has_range) {
      model.add_constraint(info.terms, info.sense, info.rhs, "");
      continue;
    }
    // ranged row becomes a two-sided pair
    double lo = 0.0, hi = 0.0;
    const double r = info.range;
    switch (info.sense) {
      case Sense::le:
        hi = info.rhs;
        lo = info.rhs - std::abs(r);
        break;
      case Sense::ge:
        lo = info.rhs;
        hi = info.rhs + std::abs(r);
        break;
      case Sense::eq:
        if (r >= 0) {
          lo = info.rhs;
          hi = info.rhs + r;
        } else {
          lo = info.rhs + r;
          hi = info.rhs;
        }
        break;
    }
    model.add_constraint(info.terms, Sense::ge, lo, "");
    model.add_constraint(info.terms, Sense::le, hi, "");
  }
  for (const auto& [v, c] : objective) model.add_objective_term(v, c);
  model.set_objective_offset(obj_offset);
  model.validate();
  return model;
}

MipModel read_mps_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_mps(in);
}

}  // namespace dnr::mip
