#pragma once

#include <stdexcept>
#include <string>

namespace neckstretch {

// Domain errors. Everything here maps to CLI exit status 1; parse
// failures (bad rationals, bad flags, malformed JSON) use the standard
// std::invalid_argument / nlohmann parse exceptions and map to status 2.

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct length_mismatch : domain_error {
    using domain_error::domain_error;
};

struct wrong_level : domain_error {
    using domain_error::domain_error;
};

struct out_of_range_input : domain_error {
    using domain_error::domain_error;
};

struct malformed_matching : domain_error {
    using domain_error::domain_error;
};

struct unknown_component : domain_error {
    using domain_error::domain_error;
};

struct non_horizontal_class : domain_error {
    using domain_error::domain_error;
};

struct unsupported_convention : domain_error {
    using domain_error::domain_error;
};

struct degenerate_eigenvector : domain_error {
    using domain_error::domain_error;
};

} // namespace neckstretch
