#pragma once

#include <stdexcept>

namespace hess {

// Thrown when an enumeration would exceed the desk-scale work ceiling
// (flag-count budget, Weyl group size).
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hess
