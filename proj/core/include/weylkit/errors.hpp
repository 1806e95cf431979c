#pragma once

#include <stdexcept>
#include <string>

namespace weylkit {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration cap would be exceeded (desk-scale guard).
class SizeError : public Error {
public:
  using Error::Error;
};

/// Arguments are malformed or belong to incompatible structures.
class DomainError : public Error {
public:
  using Error::Error;
};

/// The operation is not defined for this group family.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

/// A stated precondition of the operation does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A map fails to respect the structure it was asked to descend through.
class StructuralError : public Error {
public:
  using Error::Error;
};

/// A textual spec (group spec, map spec, matrix entries) cannot be parsed.
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace weylkit
