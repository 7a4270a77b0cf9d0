#pragma once

#include <stdexcept>
#include <string>

namespace geo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a square root is asked of a value whose approximant already
// certifies it negative (upper bound below zero).
struct NegativeInput : Error {
  using Error::Error;
};

// A witness handed to an operation does not re-verify its defining inequality.
struct InvalidWitness : Error {
  using Error::Error;
};

struct ArityMismatch : Error {
  using Error::Error;
};

struct NotCollinear : Error {
  using Error::Error;
};

// Operation requires exact (rational/quadratic) coordinates but got none.
struct IrrationalInput : Error {
  using Error::Error;
};

// An angle argument has a vertex-arm pair certified coincident.
struct DegenerateAngle : Error {
  using Error::Error;
};

// Angle addition where the two summands provably exceed a straight angle,
// leaving the chord betweenness clauses unsatisfiable.
struct SumExceedsStraight : Error {
  using Error::Error;
};

struct DegenerateTriangle : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& what_)
      : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + what_),
        line(line_), col(col_) {}
};

struct UnboundName : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

struct Rebind : Error {
  using Error::Error;
};

}  // namespace geo
