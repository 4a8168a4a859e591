#pragma once

#include <stdexcept>
#include <string>

namespace joinring {

// Malformed data: bad tables, shape mismatches, unparsable input.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Violated mathematical hypothesis: wrong characteristic, non-unit where a
// unit is required, non-cyclic group fed to the Fourier layer, and so on.
class hypothesis_error : public std::runtime_error {
public:
  explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (iteration cap hit with large residuals).
class numeric_error : public std::runtime_error {
public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace joinring
