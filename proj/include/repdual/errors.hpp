#pragma once

#include <stdexcept>
#include <string>

namespace repdual {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define REPDUAL_DEFINE_ERROR(name)               \
    class name : public Error {                  \
       public:                                   \
        explicit name(const std::string& what)   \
            : Error(#name ": " + what) {}        \
    }

REPDUAL_DEFINE_ERROR(ClosureCapExceeded);
REPDUAL_DEFINE_ERROR(CapExceeded);
REPDUAL_DEFINE_ERROR(InvalidPermutation);
REPDUAL_DEFINE_ERROR(NotAGroup);
REPDUAL_DEFINE_ERROR(LengthMismatch);
REPDUAL_DEFINE_ERROR(NotCoprime);
REPDUAL_DEFINE_ERROR(NotRational);
REPDUAL_DEFINE_ERROR(LiftVerificationFailed);
REPDUAL_DEFINE_ERROR(PolymatroidViolation);
REPDUAL_DEFINE_ERROR(DomainError);
REPDUAL_DEFINE_ERROR(NonIntegerMultiplicity);
REPDUAL_DEFINE_ERROR(NotAbelian);

#undef REPDUAL_DEFINE_ERROR

/// Malformed group/code description. `field` is a JSON-pointer-like path.
class ParseError : public Error {
   public:
    ParseError(std::string field, const std::string& what)
        : Error("ParseError at " + (field.empty() ? std::string("<root>") : field) + ": " + what),
          field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

   private:
    std::string field_;
};

}  // namespace repdual
