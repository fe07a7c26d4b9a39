#pragma once

#include <stdexcept>
#include <string>

namespace zetadiv {

/// Base of every error raised by the library. Each subclass names one
/// failure kind so callers can catch precisely.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define ZETADIV_DEFINE_ERROR(Name)                  \
    class Name : public Error {                     \
    public:                                         \
        explicit Name(const std::string& what)      \
            : Error(#Name ": " + what) {}           \
    }

ZETADIV_DEFINE_ERROR(NoPrime);
ZETADIV_DEFINE_ERROR(ModulusReducible);
ZETADIV_DEFINE_ERROR(TooLarge);
ZETADIV_DEFINE_ERROR(ZeroDivisor);
ZETADIV_DEFINE_ERROR(ZeroConstantTerm);
ZETADIV_DEFINE_ERROR(NotPowerSums);
ZETADIV_DEFINE_ERROR(NotReduced);
ZETADIV_DEFINE_ERROR(NotConsistent);
ZETADIV_DEFINE_ERROR(InvalidInput);

#undef ZETADIV_DEFINE_ERROR

}  // namespace zetadiv
