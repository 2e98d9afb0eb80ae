#pragma once

#include <stdexcept>
#include <string>

namespace kassembly {

// Denominator with zero constant term, or an operation that would create one.
struct invalid_rational_function : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Division of truncated series by a series whose constant term vanishes.
struct non_unit_divisor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Infinite product whose factors fail to converge coefficientwise.
struct divergent_product : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed rational-function text.
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Monomials or combinations fed to an algebra they do not belong to.
struct algebra_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Generator images that are inhomogeneous or disagree on the degree shift.
struct invalid_derivation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input algebra outside the family a routine is valid for.
struct unsupported_algebra : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Basis request that would be infinite-dimensional in some degree.
struct unbounded_basis : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Truncated model too small for the degrees a computation needs.
struct insufficient_window : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request whose answer the library deliberately declines to fabricate
// (e.g. an absolute series over a base of non-finite type).
struct unsupported_request : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Spectrum descriptor that fails validation.
struct invalid_descriptor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace kassembly
