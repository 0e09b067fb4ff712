#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pstab {

enum class Errc {
  MalformedScalar,
  FieldMismatch,
  NotSquare,
  SizeMismatch,
  SingularMatrix,
  DetNotOne,
  NotInvertible,
  ZeroMatrix,
  BadValue,
  MissingKey,
  UnknownKey,
  RelatorViolation,
  Unsupported,
  Internal,
};

std::string_view errc_name(Errc c);

/// Domain error carrying a machine-readable code and an optional input location.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::string where = {})
      : std::runtime_error(message), code_(code), where_(std::move(where)) {}

  Errc code() const { return code_; }
  const std::string& where() const { return where_; }
  std::string_view code_name() const { return errc_name(code_); }

 private:
  Errc code_;
  std::string where_;
};

[[noreturn]] inline void fail(Errc code, std::string message, std::string where = {}) {
  throw Error(code, std::move(message), std::move(where));
}

// Breached internal invariant, as opposed to a bad input. CLI maps this to exit 1.
inline void require_internal(bool ok, const char* what) {
  if (!ok) throw Error(Errc::Internal, std::string("internal invariant breached: ") + what);
}

}  // namespace pstab
