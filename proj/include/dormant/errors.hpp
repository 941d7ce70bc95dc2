#pragma once

#include <stdexcept>
#include <string>

namespace dormant {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph
struct NotConnected : Error { using Error::Error; };
struct NotTrivalent : Error { using Error::Error; };
struct DuplicateId : Error { using Error::Error; };
struct UnknownVertex : Error { using Error::Error; };
struct UnknownCatalogName : Error { using Error::Error; };
struct GenusTooLarge : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };

// admissibility
struct ZeroModulus : Error { using Error::Error; };
struct GuardExceeded : Error { using Error::Error; };

// enumeration
struct MissingEdge : Error { using Error::Error; };
struct ExtraEdge : Error { using Error::Error; };
struct MemoryCapExceeded : Error { using Error::Error; };

// quasipoly
struct BoundExceeded : Error { using Error::Error; };
struct InsufficientSamples : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct InconsistentSamples : Error { using Error::Error; };
struct NoPeriodValidates : Error { using Error::Error; };
struct UndefinedConstituent : Error { using Error::Error; };

// formulas
struct NotNearInteger : Error { using Error::Error; };
struct ZeroDenominator : Error { using Error::Error; };
struct NonIntegerRatio : Error { using Error::Error; };
struct UnsupportedGenus : Error { using Error::Error; };

// cli
struct UsageError : Error { using Error::Error; };

}  // namespace dormant
