#pragma once

#include <stdexcept>
#include <string>

namespace hst {

struct InvalidArity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonAdjacentLabels : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoSuchTriangulation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fires only if the main theorem fails on an instance; a firing is a bug
// either here or in the theorem's hypotheses being violated by the input.
struct TheoremViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct UnknownFormat : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PointOutside : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hst
