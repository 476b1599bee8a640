#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace gcfloer {

// Bad arguments or a precondition violated by the caller.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An iterative method gave up. `last_estimate` is whatever it had at the end.
struct NonConvergence : std::runtime_error {
    NonConvergence(const std::string& what, std::complex<double> last = {})
        : std::runtime_error(what), last_estimate(last) {}
    std::complex<double> last_estimate;
};

struct NotADifferential : std::runtime_error {
    NotADifferential() : std::runtime_error("not a differential") {}
};

}  // namespace gcfloer
