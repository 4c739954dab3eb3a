#pragma once

#include <stdexcept>
#include <string>

namespace cospec {

enum class Errc {
  OutOfRange,
  SelfPairInEdgeList,
  SizeExceeded,
  MalformedHeader,
  TruncatedBitVector,
  NonCanonicalPadding,
  LoopsNotRepresentable,
  Disconnected,
  LengthOutOfRange,
  HypothesisUnmet,
  TooLarge,
  BudgetExceeded,
  InvalidRotation,
  ParameterOutOfRange,
  CorruptDataFile,
  AuditFailure,
  ParseError,
  Mismatch,
};

const char* errc_name(Errc c);

/// All library errors carry an Errc so the CLI can map them to exit codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace cospec
