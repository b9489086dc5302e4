#ifndef HOMCALC_ERRORS_HPP
#define HOMCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homcalc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RingMismatchError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct InhomogeneousError : Error { using Error::Error; };
struct ExponentOverflowError : Error { using Error::Error; };

// groebner
struct NotInImageError : Error { using Error::Error; };
struct ZerodivisorError : Error { using Error::Error; };

// resolution
struct WindowTooShortError : Error { using Error::Error; };
struct NoNonvanishingError : Error { using Error::Error; };

// stable
struct ReflexivityFailure : Error { using Error::Error; };
struct ExtNonvanishing : Error {
    int index;
    ExtNonvanishing(int n, const std::string& what) : Error(what), index(n) {}
};
struct ExactnessFailure : Error {
    int index;
    ExactnessFailure(int i, const std::string& what) : Error(what), index(i) {}
};
struct NotMCMError : Error { using Error::Error; };

// homotopy
struct LiftFailureError : Error { using Error::Error; };
struct InsufficientHomotopyData : Error { using Error::Error; };
struct NotMinimalError : Error { using Error::Error; };

// rigidity
struct PreconditionUnwitnessed : Error { using Error::Error; };

// cli
struct ParseError : Error {
    int line;
    int column;
    ParseError(int l, int c, const std::string& what) : Error(what), line(l), column(c) {}
};
struct UsageError : Error { using Error::Error; };

}  // namespace homcalc

#endif
