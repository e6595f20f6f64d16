#pragma once

#include <stdexcept>
#include <string>

namespace lip {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field construction / arithmetic
struct NonPrimeCharacteristic : Error { using Error::Error; };
struct UnsupportedSize : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct InvalidExponentIndex : Error { using Error::Error; };

// polynomials
struct DivisionByZeroPoly : Error { using Error::Error; };
struct BothZero : Error { using Error::Error; };
struct ZeroInput : Error { using Error::Error; };
struct DegreeZeroInput : Error { using Error::Error; };
struct NonPositiveDegree : Error { using Error::Error; };

// matrices
struct DimensionMismatch : Error { using Error::Error; };
struct NotAPermutation : Error { using Error::Error; };
struct ZeroWeight : Error { using Error::Error; };
struct RepeatedNode : Error { using Error::Error; };
struct SingularCell : Error { using Error::Error; };
struct NotDistinct : Error { using Error::Error; };
struct TooLargeForExhaustiveCheck : Error { using Error::Error; };

// codes
struct EmptyMatrix : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct ZeroCode : Error { using Error::Error; };
struct TooLargeToEnumerate : Error { using Error::Error; };
struct NotMonomial : Error { using Error::Error; };

// pairs
struct InvalidDims : Error { using Error::Error; };
struct NotFoundWithinBudget : Error { using Error::Error; };
struct GammaOutOfRange : Error { using Error::Error; };
struct NotSuperRegular : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct SearchSpaceTooLarge : Error { using Error::Error; };

// GRS
struct RootAtEvaluationPoint : Error { using Error::Error; };
struct DegreeTooLarge : Error { using Error::Error; };
struct ParameterOutOfRange : Error { using Error::Error; };
struct DegreeConditionViolated : Error { using Error::Error; };
struct TheoremPreconditionViolated : Error { using Error::Error; };
struct LcmDegreeTooLarge : Error { using Error::Error; };

// EAQECC
struct DistanceTooExpensive : Error { using Error::Error; };
struct CertificationFailure : Error { using Error::Error; };
struct CatalogMiss : Error { using Error::Error; };

} // namespace lip
