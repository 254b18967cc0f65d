#pragma once

#include <string>

namespace specdens {

/// Locale-independent decimal formatting, 15 significant digits by default.
/// All CSV output goes through this so identical inputs give identical bytes.
std::string format_real(double x, int significant_digits = 15);

}  // namespace specdens
