#pragma once

#include <string>

namespace qhe {

// 17-significant-digit decimal form of v; parses back to the same bits.
std::string format_double(double v);

// Minimal JSON string escaping (quotes, backslash, control characters).
std::string json_escape(const std::string& s);

}  // namespace qhe
