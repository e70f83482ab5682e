#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mtlpc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in a formula or a malformed input file. `position()` is a
/// 0-based character offset into the parsed text (or npos when unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position = std::string::npos);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownPropositionError : public Error {
 public:
  explicit UnknownPropositionError(const std::string& name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class FragmentError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace mtlpc
