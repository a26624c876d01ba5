#ifndef RINGLAB_ERROR_HPP_
#define RINGLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ringlab {

// Every failure the library can signal, so callers can dispatch without
// string matching.
enum class Errc {
  NotAGroup,
  NotAssociative,
  NoIdentity,
  NotDistributive,
  BadInvolution,
  NonPrimeCharacteristic,
  SizeBudgetExceeded,
  SyntaxError,
  UnknownConstructor,
  BudgetExceeded,
  NotContained,
  NotRickartAt,
  NotAbelian,
  NoDecomposition,
  InvalidArgument,
  IoError,
  InternalCheck,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace ringlab

#endif  // RINGLAB_ERROR_HPP_
