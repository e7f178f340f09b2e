#pragma once

#include <string>

namespace epl {

/// Fixed six decimal places, '.' separator regardless of locale. All CSV and
/// summary output funnels through this so files are byte-reproducible.
std::string format_fixed6(double value);

}  // namespace epl
