#pragma once

#include <stdexcept>
#include <string>

namespace filling {

/// Input text could not be parsed; position() is the zero-based offset of
/// the offending character within the line or word being read.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A structural invariant of a diagram, tree or schedule was violated.
class ValidationError : public std::runtime_error {
 public:
  enum class Kind {
    Malformed,           // ids out of range, missing fields, bad structure
    TwinNotInvolutive,   // twin(twin(d)) != d, twin(d) == d, or label mismatch
    RotationInvalid,     // rotation lists do not partition darts by origin
    FaceMismatch,        // declared face cycles differ from derived orbits
    FaceLabelNotRelator, // an inner face word is not a relator up to cyclic
                         // permutation and inversion
    BaseOffBoundary,
    Disconnected,
    EulerCharacteristic, // V - E + F != 2 counting the outer face
    IllegalMove,
    BadSchedule,         // shelling schedule removes a non-visible node
  };

  ValidationError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A bounded search refused to answer within its budget.  Never reported as
/// a negative result: the caller only learns that the budget was exhausted.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace filling
