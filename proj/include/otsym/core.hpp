#pragma once

#include <stdexcept>
#include <string>

namespace otsym {

// Version string stamped into cache files; bumping it invalidates them.
inline constexpr const char* engine_version = "otsym/1.0.0";

// Raised when an internal exactness guarantee is violated (e.g. a Kronecker
// division produces a non-integral or negative Schur coefficient). The CLI
// maps this to exit code 3.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace otsym
