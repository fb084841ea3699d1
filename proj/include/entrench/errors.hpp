#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace entrench {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Formula text could not be parsed. `offset` is the byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, std::string found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
  std::string found_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(std::string name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// A vocabulary or scan exceeds the configured exhaustive-computation cap.
class VocabularyTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidVocabulary : public Error {
 public:
  using Error::Error;
};

/// Malformed entrenchment, table or knowledge-base file.
class FormatError : public Error {
 public:
  FormatError(std::string source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A checker refused to run because its structural precondition does not hold.
class GuardFailure : public Error {
 public:
  using Error::Error;
};

class ConnectivityRequired : public GuardFailure {
 public:
  using GuardFailure::GuardFailure;
};

class WeakDisjunctionRequired : public GuardFailure {
 public:
  using GuardFailure::GuardFailure;
};

}  // namespace entrench
