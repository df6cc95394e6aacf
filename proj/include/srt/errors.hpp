#pragma once

#include <stdexcept>
#include <string>

namespace srt {

// Input validation failures when building a complex from labels/facets.
struct UnknownLabelError : std::runtime_error { using std::runtime_error::runtime_error; };
struct DuplicateLabelError : std::runtime_error { using std::runtime_error::runtime_error; };
struct IsolatedLabelError : std::runtime_error { using std::runtime_error::runtime_error; };

struct NotAFaceError : std::runtime_error { using std::runtime_error::runtime_error; };
struct UnknownVertexError : std::runtime_error { using std::runtime_error::runtime_error; };
struct EmptyFaceError : std::runtime_error { using std::runtime_error::runtime_error; };
struct VoidComplexError : std::runtime_error { using std::runtime_error::runtime_error; };

struct NonPrimeModulusError : std::runtime_error { using std::runtime_error::runtime_error; };

struct CapTooSmallError : std::runtime_error { using std::runtime_error::runtime_error; };
struct TruncatedTableError : std::runtime_error { using std::runtime_error::runtime_error; };
struct BudgetExceededError : std::runtime_error { using std::runtime_error::runtime_error; };

struct OutOfRangeError : std::runtime_error { using std::runtime_error::runtime_error; };
struct OutOfStatedRangeError : std::runtime_error { using std::runtime_error::runtime_error; };
struct LengthMismatchError : std::runtime_error { using std::runtime_error::runtime_error; };

// Raised when two routes that must agree by theorem disagree; always a bug.
struct ConsistencyViolationError : std::logic_error { using std::logic_error::logic_error; };

struct ParseError : std::runtime_error { using std::runtime_error::runtime_error; };

} // namespace srt
