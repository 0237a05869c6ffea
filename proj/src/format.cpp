#include "dimred/format.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace dimred {

std::string format_real(double value) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::string format_fixed(double value, int decimals) {
    std::array<char, 64> buf{};
    if (value == 0.0) value = 0.0;  // drop negative zero
    const int len = std::snprintf(buf.data(), buf.size(), "%.*f", decimals, value);
    std::string out(buf.data(), static_cast<std::size_t>(len));
    if (out.find_first_not_of("-0.") == std::string::npos && out.front() == '-') out.erase(0, 1);
    return out;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
    std::string out = "\"";
    for (const char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace dimred
