#pragma once

#include <stdexcept>
#include <string>

namespace gsq {

// Error taxonomy shared by the whole library. Codes mirror the failure
// modes of the public operations; the CLI maps them to exit codes.
enum class Errc {
  kOutOfRange,
  kSelfLoop,
  kEmptyGraph,
  kBadArgument,
  kTooLarge,
  kNotAPermutation,
  kInvalidWitness,
  kNotAHole,
  kInternalContradiction,  // a verified theorem failed at runtime; must never fire
  kBadChar,
  kTruncated,
  kTrailingBits,
  kCountMismatch,
  kBadFormat,
  kIoError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace gsq
