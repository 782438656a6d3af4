#pragma once

#include <stdexcept>
#include <string>

namespace fseg {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid user input: malformed alphabets, unknown letters, bad schema.
class input_error : public error {
public:
  using error::error;
};

/// Operands built over different alphabets.
class alphabet_mismatch : public error {
public:
  alphabet_mismatch() : error("operands are over different alphabets") {}
};

/// An operation was called outside its domain (e.g. envelope of the empty set).
class precondition_error : public error {
public:
  using error::error;
};

/// An exhaustive search refused to run because its input exceeds a size cap.
class cap_exceeded : public error {
public:
  using error::error;
};

} // namespace fseg
