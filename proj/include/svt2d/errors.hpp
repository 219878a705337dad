#pragma once

#include <stdexcept>

namespace svt2d {

// Error categories map onto distinct CLI exit codes (see tools/svt2d_main.cpp):
// ConfigError -> 2, NumericError -> 3, IoError -> 4. Precondition violations
// use std::invalid_argument and exit with code 2 as well.

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace svt2d
