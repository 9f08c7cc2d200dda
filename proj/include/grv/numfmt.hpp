#pragma once

#include <string>

namespace grv {

/// Shortest decimal that round-trips to the same binary64 value.
/// Non-finite values render as "nan", "inf" or "-inf".
std::string shortest(double v);

/// printf-style %.{digits}g.
std::string significant(double v, int digits = 15);

}  // namespace grv
