#pragma once

#include <stdexcept>
#include <string>

namespace clusternl {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonHermitianError : std::logic_error {
  using std::logic_error::logic_error;
};

struct GroupTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchCeilingExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoPathError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedArity : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace clusternl
