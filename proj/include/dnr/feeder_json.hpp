#pragma once

#include <iosfwd>
#include <string>

#include "dnr/feeder.hpp"

namespace dnr {

/// Parses the versioned feeder document (JSON, format "dnr-feeder" v1) and
/// validates the result. See docs/formats.md for the schema.
Feeder load_feeder(std::istream& in);
Feeder load_feeder_file(const std::string& path);

void save_feeder(const Feeder& feeder, std::ostream& out);
void save_feeder_file(const Feeder& feeder, const std::string& path);

}  // namespace dnr
