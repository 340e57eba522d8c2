/**
 * textsim — semantic text similarity toolkit
 *
 * Copyright (c) 2026 The textsim Authors
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace textsim {

/// Base class for every error raised by the library. The CLI maps IoError to
/// exit code 1 and all other Error subclasses to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure to open, read or write a file.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed file content. Carries the offending path and 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string path, std::size_t line)
      : Error(path + ":" + std::to_string(line) + ": " + message),
        path_(std::move(path)),
        line_(line) {}

  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string path_;
  std::size_t line_ = 0;
};

/// CSV record with the wrong column count or an unmappable class label.
class MalformedRow : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Invalid first line of a word2vec text file.
class BadHeader : public ParseError {
 public:
  using ParseError::ParseError;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class BadSampleSize : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class MissingTermMatrix : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class MatrixTooSmall : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was violated (e.g. neighbor search on a matrix
/// whose diagonal has not been excluded yet).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace textsim
