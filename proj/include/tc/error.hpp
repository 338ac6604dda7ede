#pragma once
#include <stdexcept>
#include <string>

namespace tc {

enum class ErrorCode {
  bad_char,        // E_CHAR
  bad_extension,   // E_EXT
  missing_field,   // E_MISSING_FIELD
  syntax,          // E_SYNTAX
  not_cubic,       // E_NOT_CUBIC
  singular_cubic,  // E_SINGULAR
  not_primary,     // E_NOT_PRIMARY
  bad_ideal,       // E_IDEAL
  bad_candidate,   // E_CANDIDATE
  field_mismatch,  // E_FIELD
  invariant,       // E_INVARIANT
  undecided,       // E_UNDECIDED
};

const char* error_tag(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tc
