#pragma once

#include <stdexcept>
#include <string>

namespace toral {

// Base for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input files / unparsable data. CLI maps this to exit 1.
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

// A mathematical hypothesis of the requested operation is violated
// (non-hyperbolic matrix, dissimilar pair, reducible characteristic
// polynomial where the irreducible case is required, ...).
// CLI maps this to exit 2. `hypothesis` names the violated assumption.
struct precondition_error : error {
    std::string hypothesis;
    precondition_error(const std::string& hyp, const std::string& what)
        : error(what), hypothesis(hyp) {}
};

// Internal consistency failure: a proven identity did not hold.
struct internal_error : error {
    explicit internal_error(const std::string& what) : error(what) {}
};

} // namespace toral
