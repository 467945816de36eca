#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace posetpack {

// Error classes double as CLI exit codes: 2 input, 3 budget, 4 verification.
enum class ErrorClass : int {
  Input = 2,
  Budget = 3,
  Verification = 4,
};

class Error : public std::runtime_error {
public:
  Error(ErrorClass cls, const std::string& what)
      : std::runtime_error(what), cls_(cls) {}

  ErrorClass error_class() const noexcept { return cls_; }

private:
  ErrorClass cls_;
};

struct RangeError : Error {
  explicit RangeError(const std::string& w) : Error(ErrorClass::Input, w) {}
};

struct CycleError : Error {
  explicit CycleError(const std::string& w) : Error(ErrorClass::Input, w) {}
};

struct GroundMismatchError : Error {
  explicit GroundMismatchError(const std::string& w)
      : Error(ErrorClass::Input, w) {}
};

struct IterationError : Error {
  explicit IterationError(const std::string& w) : Error(ErrorClass::Input, w) {}
};

struct InfeasibleError : Error {
  explicit InfeasibleError(const std::string& w) : Error(ErrorClass::Input, w) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorClass::Input, w) {}
};

// Raised when the requested ambient ground set is too small for a packing
// plan; carries the smallest n that would work.
struct TooSmallError : Error {
  TooSmallError(int n_min, const std::string& w)
      : Error(ErrorClass::Input, w), min_n(n_min) {}
  int min_n;
};

struct CapError : Error {
  explicit CapError(const std::string& w) : Error(ErrorClass::Budget, w) {}
};

struct SizeError : Error {
  explicit SizeError(const std::string& w) : Error(ErrorClass::Budget, w) {}
};

struct BudgetError : Error {
  BudgetError(std::uint64_t refused_count, const std::string& w)
      : Error(ErrorClass::Budget, w), refused(refused_count) {}
  std::uint64_t refused;
};

}  // namespace posetpack
