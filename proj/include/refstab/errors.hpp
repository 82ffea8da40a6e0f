#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace refstab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A record block that cannot be parsed, e.g. one without an end-of-record tag.
class MalformedRecord : public Error {
 public:
  MalformedRecord(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class ThresholdMismatch : public Error {
 public:
  using Error::Error;
};

class GapTooLarge : public Error {
 public:
  GapTooLarge(int gap, const std::string& what) : Error(what), gap_(gap) {}
  int gap() const { return gap_; }

 private:
  int gap_;
};

class NoDefinedPoints : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace refstab
