#pragma once

#include <stdexcept>

namespace modtab {

// An exhaustive scan would exceed the configured cap.
struct SizeLimitError : std::length_error {
    using std::length_error::length_error;
};

// A bounded search ran out of room without settling the question.
struct InconclusiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numeric check contradicted a proved theorem.  Must never fire; if it
// does, the build is broken, not the theorem.
struct TheoremViolationError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace modtab
