#pragma once

#include <stdexcept>
#include <string>

namespace ovdkit {

struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SyntaxError : std::runtime_error {
  std::size_t offset;
  SyntaxError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " (byte offset " + std::to_string(off) + ")"),
        offset(off) {}
};

struct UnknownVariable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAPermutation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingC : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingA3 : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CompatibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CoverGap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlueDefect : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ovdkit
