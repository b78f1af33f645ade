#ifndef TENHUNDRED_SRC_TEXT_UTIL_H_
#define TENHUNDRED_SRC_TEXT_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace tenhundred::internal {

// Splits on `sep`, keeping empty fields.
std::vector<std::string_view> Split(std::string_view s, char sep);

// Drops trailing spaces, tabs, and '\r'.
std::string_view StripTrailing(std::string_view s);

// True iff `s` is well-formed UTF-8 (no overlongs, no surrogates).
bool IsValidUtf8(std::string_view s);

}  // namespace tenhundred::internal

#endif  // TENHUNDRED_SRC_TEXT_UTIL_H_
