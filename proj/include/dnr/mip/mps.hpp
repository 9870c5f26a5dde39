#pragma once

#include <iosfwd>
#include <string>

#include "dnr/mip/model.hpp"

namespace dnr::mip {

/// Writes the model in fixed-format MPS (sections NAME/ROWS/COLUMNS/RHS/
/// BOUNDS plus INTORG/INTEND markers). Rows are named c<row_id>, columns
/// x<var_id>, the objective row is COST; ordering is deterministic. Value
/// fields are wide enough to round-trip doubles exactly.
void write_mps(const MipModel& model, std::ostream& out,
               const std::string& name = "DNR");

void write_mps_file(const MipModel& model, const std::string& path,
                    const std::string& name = "DNR");

/// Reads the subset emitted by write_mps plus RANGES (a ranged row is split
/// into a le/ge pair). Role tags are not representable in MPS and come back
/// empty.
MipModel read_mps(std::istream& in);

MipModel read_mps_file(const std::string& path);

}  // namespace dnr::mip
