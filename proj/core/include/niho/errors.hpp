#pragma once

#include <stdexcept>
#include <string>

namespace niho {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field construction
struct NonPrimeModulus : Error { using Error::Error; };
struct NotPrimitive : Error { using Error::Error; };
struct SizeLimit : Error { using Error::Error; };

// field arithmetic
struct NotInSubfield : Error { using Error::Error; };
struct OddCharacteristic : Error { using Error::Error; };
struct ZeroInput : Error { using Error::Error; };

// family validation
struct ConstraintViolation : Error { using Error::Error; };

// exponential sums
struct IrrationalSum : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

// closed forms
struct NonIntegralFrequency : Error { using Error::Error; };
struct NegativeFrequency : Error { using Error::Error; };
struct WrongFamily : Error { using Error::Error; };

// code construction
struct CosetCollision : Error { using Error::Error; };

}  // namespace niho
