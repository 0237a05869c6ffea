#pragma once

#include <string>

namespace dimred {

/// Shortest decimal text that round-trips to the same double.
std::string format_real(double value);

/// Fixed-point text with the given number of decimals ("C" locale).
std::string format_fixed(double value, int decimals);

/// Quote a CSV field if it contains a comma, quote, or newline.
std::string csv_field(const std::string& text);

}  // namespace dimred
