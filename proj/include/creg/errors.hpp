#pragma once

#include <stdexcept>
#include <string>

namespace creg {

// Library failure modes. Everything derives from Error so the CLI boundary
// can catch the whole family and translate to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An edge shorter than the degeneracy threshold was used for alignment.
class DegenerateEdge : public Error {
 public:
  using Error::Error;
};

// A point configuration too degenerate to fix a rigid transform
// (fewer than 3 pairs, or collinear/coincident points).
class DegenerateConfiguration : public Error {
 public:
  using Error::Error;
};

// The edge sweep never found an admissible consensus.
class NoConsensus : public Error {
 public:
  using Error::Error;
};

// An operation requiring at least two correspondences got fewer.
class EmptySet : public Error {
 public:
  using Error::Error;
};

// A correspondence file held fewer than 3 records.
class EmptyFile : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace creg
