#pragma once

#include <stdexcept>
#include <string>

namespace lieforge {

/// Base of every error the library raises. `code()` is the stable name that
/// also appears in the C API status enum.
class Error : public std::runtime_error {
 public:
  Error(const char* code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  const char* code() const noexcept { return code_; }

 private:
  const char* code_;
};

#define LIEFORGE_DEFINE_ERROR(Name)                                       \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what) : Error(#Name, what) {}        \
  };

LIEFORGE_DEFINE_ERROR(DimError)
LIEFORGE_DEFINE_ERROR(IndexError)
LIEFORGE_DEFINE_ERROR(ParamError)
LIEFORGE_DEFINE_ERROR(BasisError)
LIEFORGE_DEFINE_ERROR(ShapeError)
LIEFORGE_DEFINE_ERROR(NotVClosedError)
LIEFORGE_DEFINE_ERROR(InconsistentBlocksError)
LIEFORGE_DEFINE_ERROR(PurityError)
LIEFORGE_DEFINE_ERROR(PrecondError)
LIEFORGE_DEFINE_ERROR(ParseError)

#undef LIEFORGE_DEFINE_ERROR

}  // namespace lieforge
