#pragma once

#include <string>
#include <string_view>

namespace visrank {

bool is_valid_utf8(std::string_view s);

// Canonical composition (NFC). Throws std::invalid_argument on malformed UTF-8.
std::string nfc(std::string_view s);

// Full Unicode case folding (no normalization).
std::string casefold(std::string_view s);

// Key used for caseless word matching: nfc(casefold(nfc(s))).
std::string fold_key(std::string_view s);

}  // namespace visrank
