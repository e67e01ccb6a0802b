#pragma once

#include <stdexcept>
#include <string>

namespace eqlab {

enum class ErrorKind {
  InvalidArgument,
  Precondition,
  CapExceeded,
  Parse,
  UnknownObject,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorKind::InvalidArgument, what) {}
};

class PreconditionViolation : public Error {
 public:
  explicit PreconditionViolation(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

// Raised when an exhaustive enumeration would exceed its configured bound.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& cap_name, const std::string& what)
      : Error(ErrorKind::CapExceeded, what), cap_name_(cap_name) {}
  const std::string& cap_name() const noexcept { return cap_name_; }

 private:
  std::string cap_name_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

class UnknownObject : public Error {
 public:
  explicit UnknownObject(const std::string& what) : Error(ErrorKind::UnknownObject, what) {}
};

// A construction that is guaranteed by the theory produced something that
// fails its own verification.
class InternalInvariant : public Error {
 public:
  explicit InternalInvariant(const std::string& what) : Error(ErrorKind::Internal, what) {}
};

}  // namespace eqlab
