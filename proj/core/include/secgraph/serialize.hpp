#pragma once

#include <string>

namespace secgraph {

/// Decimal with the given number of significant digits; "inf", "-inf", "nan"
/// for non-finite values.
std::string format_real(double v, int digits = 12);

/// Parses a real, accepting "inf"/"infinity" in any case.
double parse_real(const std::string& s);

}  // namespace secgraph
