#pragma once

#include <cstdint>

#include "lambda3/quadfield/quad_elem.hpp"

namespace lambda3 {

/// Fundamental unit eps > 1 of the real quadratic order of fundamental
/// discriminant D > 0, from the period of the continued fraction of the
/// reduced quadratic irrational (P + sqrt(D)) / 2.
QuadElem fundamental_unit(std::int64_t D);

/// Length of the continued-fraction period used by fundamental_unit.
std::int64_t cf_period_length(std::int64_t D);

}  // namespace lambda3
