#pragma once

#include "omw/ordinal.hpp"

// Bookkeeping helpers for residual sums and derivative stages. These are not
// part of the public ordinal surface; general ordinal arithmetic stays out of
// the library API.
namespace omw::detail {

// Cantor-normal-form sum a + b.
Ordinal ord_add(const Ordinal& a, const Ordinal& b);

// The unique g with a + g = b. pre: a <= b.
Ordinal ord_left_diff(const Ordinal& a, const Ordinal& b);

}  // namespace omw::detail
