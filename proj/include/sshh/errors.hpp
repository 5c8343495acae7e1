#ifndef SSHH_ERRORS_HPP
#define SSHH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sshh {

// Exit codes used by the CLI; library code throws, tools map to codes.
enum class ErrorKind : int {
  Other = 1,
  Schema = 2,
  Capacity = 3,
  GapClosure = 4,
  Numeric = 5,
  Argument = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what) : Error(ErrorKind::Argument, what) {}
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(ErrorKind::Capacity, what) {}
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what) : Error(ErrorKind::Schema, what) {}
};

class GapClosureError : public Error {
 public:
  GapClosureError(const std::string& what, double theta)
      : Error(ErrorKind::GapClosure, what), theta_(theta) {}
  double theta() const { return theta_; }

 private:
  double theta_;
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what) : Error(ErrorKind::Numeric, what) {}
};

}  // namespace sshh

#endif
