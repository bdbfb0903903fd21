#pragma once

#include <stdexcept>
#include <string>

namespace loyd {

// Instance too large for the exact method asked for.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// An internal cross-check disagreed (representation did not evaluate correctly, ...).
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace loyd
