#ifndef MBPNS_ERROR_HPP_
#define MBPNS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace mbpns {

// Base of every error raised by the library. `kind()` is a stable
// machine-readable tag used by the CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// A sampling parameter violates the reconstruction hypotheses.
class RangeViolation : public Error {
 public:
  RangeViolation(std::string field, std::string constraint)
      : Error("RangeViolation", "RangeViolation(" + field + "): " + constraint),
        field_(std::move(field)),
        constraint_(std::move(constraint)) {}
  const std::string& field() const noexcept { return field_; }
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string field_;
  std::string constraint_;
};

class PeriodMisaligned : public Error {
 public:
  explicit PeriodMisaligned(const std::string& what) : Error("PeriodMisaligned", what) {}
};

class DegenerateNodes : public Error {
 public:
  explicit DegenerateNodes(const std::string& what) : Error("DegenerateNodes", what) {}
};

class GridMismatch : public Error {
 public:
  explicit GridMismatch(const std::string& what) : Error("GridMismatch", what) {}
};

class SingularSystem : public Error {
 public:
  explicit SingularSystem(const std::string& what) : Error("SingularSystem", what) {}
};

class ZeroSignal : public Error {
 public:
  explicit ZeroSignal(const std::string& what) : Error("ZeroSignal", what) {}
};

// Malformed JSON/CSV input.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error("FormatError", what) {}
};

}  // namespace mbpns

#endif  // MBPNS_ERROR_HPP_
