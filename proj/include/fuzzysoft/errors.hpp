#pragma once

#include <stdexcept>
#include <string>

namespace fuzzysoft {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands were built over different universes.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// A grade is malformed or lies outside [0,1].
class GradeError : public Error {
 public:
  using Error::Error;
};

/// A grade is a valid rational but not a member of the active grid.
class OffGridError : public Error {
 public:
  using Error::Error;
};

/// Source and target grids cannot represent each other's preimages.
class GridIncompatible : public Error {
 public:
  using Error::Error;
};

/// A family handed to a topology constructor violates an axiom.
class TopologyError : public Error {
 public:
  using Error::Error;
};

/// Enumeration or sampling configuration is out of bounds.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Instance or config text could not be turned into a valid structure.
/// `locus` names the line or field path that triggered the failure.
class ParseError : public Error {
 public:
  ParseError(std::string locus, const std::string& what)
      : Error(locus.empty() ? what : locus + ": " + what), locus_(std::move(locus)), message_(what) {}

  const std::string& locus() const noexcept { return locus_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string locus_;
  std::string message_;
};

}  // namespace fuzzysoft
