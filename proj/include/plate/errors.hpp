#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace plate {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise malformed argument.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A coordinate fell outside the sphere's latitude/longitude domain.
class DomainError : public Error {
 public:
  DomainError(std::string coordinate, const std::string& what)
      : Error(what), coordinate_(std::move(coordinate)) {}

  /// "lat" or "lon".
  const std::string& coordinate() const noexcept { return coordinate_; }

 private:
  std::string coordinate_;
};

/// Latitude at a pole where the parallel scale factor 1/cos(lat) diverges.
class PoleSingularity : public Error {
 public:
  using Error::Error;
};

/// Chord length outside [0, 2R].
class InvalidChord : public Error {
 public:
  using Error::Error;
};

}  // namespace plate
