#pragma once

#include <stdexcept>
#include <string>

namespace liegauss {

struct invalid_parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_frame_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct degenerate_immersion_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct conditioning_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an operation is applied to a surface outside the case it handles,
// e.g. a normal field with an e3-component where span{e1,e2} is required.
struct wrong_case_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace liegauss
