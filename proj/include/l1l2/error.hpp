#pragma once

#include <stdexcept>
#include <string>

namespace l1l2 {

enum class ErrorKind {
  Dimension,          // length mismatch between operands
  FieldMismatch,      // real and complex operands mixed
  UndefinedConstant,  // c_x requested for the zero vector
  EmptySubspace,      // spanning set has numerical rank 0
  NoUniqueNearest,    // x is orthogonal to S
  Domain,             // argument outside the operation's domain
  Normalization,      // function is not unit norm in L2
  Refusal,            // capability limit (exact search size, complex field)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace l1l2
