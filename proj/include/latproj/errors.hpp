#pragma once

#include <stdexcept>
#include <string>

namespace latproj {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input has the wrong shape, range, or structure.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

class NotPositiveDefiniteError : public Error {
 public:
  explicit NotPositiveDefiniteError(const std::string& what) : Error(what) {}
};

/// A floor could not be separated from an integer at the maximum precision.
/// Signals a genuinely integral or adversarial input; callers holding an
/// exact rational should use the exact floor path instead.
class AmbiguousFloorError : public Error {
 public:
  explicit AmbiguousFloorError(const std::string& what) : Error(what) {}
};

/// An exact enumeration was refused because the instance is too large.
class EnumerationRefusedError : public Error {
 public:
  explicit EnumerationRefusedError(const std::string& what) : Error(what) {}
};

}  // namespace latproj
