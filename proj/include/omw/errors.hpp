#pragma once

#include <stdexcept>

namespace omw {

// Invalid inputs and precondition violations. The CLI maps these to exit 2.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration caps and iteration budgets. The CLI maps these to exit 3.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace omw
