#pragma once

#include <stdexcept>
#include <string>

namespace myriad {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An input violated a documented precondition (sample size, weight bounds,
/// parameter ranges, inconsistent configuration).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// All sample values collapsed to a single point; scale estimation is
/// ill-posed on such data.
class DegenerateSampleError : public PreconditionError {
 public:
  explicit DegenerateSampleError(const std::string& msg) : PreconditionError(msg) {}
};

class LengthMismatchError : public Error {
 public:
  explicit LengthMismatchError(const std::string& msg) : Error(msg) {}
};

class SideMismatchError : public Error {
 public:
  explicit SideMismatchError(const std::string& msg) : Error(msg) {}
};

class DimensionMismatchError : public Error {
 public:
  explicit DimensionMismatchError(const std::string& msg) : Error(msg) {}
};

class TooSmallError : public Error {
 public:
  explicit TooSmallError(const std::string& msg) : Error(msg) {}
};

/// No block of the image passed the constancy test at the smallest block size.
class NoConstantRegionsError : public Error {
 public:
  explicit NoConstantRegionsError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace myriad
