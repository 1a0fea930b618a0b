#pragma once

#include <stdexcept>
#include <string>

namespace topolayout {

// Error taxonomy mirrored by the CLI exit codes: io=1, validation=2, numeric=3.
struct io_error : std::runtime_error {
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace topolayout
