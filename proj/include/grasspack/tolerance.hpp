#pragma once

#include <string>

#include "grasspack/errors.hpp"

namespace grasspack {

/// Absolute comparison threshold used by every numerical check.
/// Valid range is (0, 1e-2); the default of 1e-9 suits unit-scale data.
class Tolerance {
public:
    Tolerance() = default;

    explicit Tolerance(double absolute) : absolute_(absolute) {
        if (!(absolute > 0.0) || !(absolute < 1e-2)) {
            throw ValidationError("tolerance must lie in (0, 1e-2), got " +
                                  std::to_string(absolute));
        }
    }

    double absolute() const { return absolute_; }

private:
    double absolute_ = 1e-9;
};

} // namespace grasspack
