#ifndef HYLL_ERRORS_HPP
#define HYLL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyll {

// The assembled radial power went negative (or the exponential weight is
// not decaying): the s-integral does not exist. Indicates a basis or
// weight bug upstream, never a data-dependent condition.
class DivergentIntegral : public std::runtime_error {
 public:
  explicit DivergentIntegral(const std::string& what) : std::runtime_error(what) {}
};

class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

class CheckpointError : public std::runtime_error {
 public:
  explicit CheckpointError(const std::string& what) : std::runtime_error(what) {}
};

class TableParseError : public std::runtime_error {
 public:
  explicit TableParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyll

#endif  // HYLL_ERRORS_HPP
