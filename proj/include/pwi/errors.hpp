#pragma once

#include <stdexcept>
#include <string>

namespace pwi {

/// Bad descriptors, unknown names, malformed files. CLI exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Well-formed request that the numerics refuse (unsaturated closure,
/// failed certification, inconsistent refinement). CLI exit code 3.
struct NumericalFailure : std::runtime_error {
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pwi
