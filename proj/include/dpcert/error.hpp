#pragma once

#include <stdexcept>
#include <string>

namespace dpcert {

enum class Errc {
  DivisionByZero,
  NotInvertible,
  InvalidPrime,
  InvalidPartition,
  WrongCharacteristic,
  TermCapExceeded,
  ParseError,
  ResourceCap,
  UnsupportedFrame,
  BoundExceedsP,
  InvalidAssignment,
  NotInIdeal,
  NotInSquareOfMaximalIdeal,
  NotAHomomorphism,
  InvalidBounds,
  CertificateInapplicable,
  DegenerateIndex,
  InvalidDomain,
  InvalidInstance,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace dpcert
