#pragma once

#include <stdexcept>
#include <string>

namespace dnr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input data failed validation (bad feeder document, malformed CSV, ...).
struct ValidationError : Error {
  using Error::Error;
};

/// Filesystem / parse-level failure.
struct IoError : Error {
  using Error::Error;
};

}  // namespace dnr
