#ifndef NRS_ERROR_HPP
#define NRS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nrs {

enum class ErrorKind {
  Singular,
  ShapeMismatch,
  NotSymmetric,
  Degenerate,
  SingularCayley,
  NotSkew,
  WrongSignature,
  IrrationalInvariant,
  Unclassifiable,
  MetricMismatch,
  InvalidStructure,
  DegenerateW,
  HNotClosed,
  NotReductive,
  NotNaturallyReductive,
  ParamOutOfDomain,
  Parse,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nrs

#endif
