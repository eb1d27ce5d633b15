#pragma once

#include <stdexcept>
#include <string>

namespace zetadyn {

/// Raised for every domain-level failure: invalid parameters, non-invertible
/// series, inconsistent fixed-point data and so on.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace zetadyn
