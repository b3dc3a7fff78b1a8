#pragma once

#include <stdexcept>
#include <string>

namespace lmmscan {

// File/format problems: malformed input, bad cache, dimension mismatch.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical problems: rank deficiency, non-finite input, failed optimization.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lmmscan
