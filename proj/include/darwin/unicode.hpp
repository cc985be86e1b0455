#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace darwin::unicode {

// Canonical composition (NFC) of UTF-8 text. Invalid byte sequences are
// replaced with U+FFFD before normalization so the result is always valid.
std::string nfc(std::string_view utf8);

// Decodes one scalar starting at `i`, advancing `i` past it. Invalid bytes
// decode as U+FFFD one byte at a time.
char32_t decode_scalar(std::string_view utf8, size_t& i);

void append_utf8(std::string& out, char32_t cp);

// Counts Unicode scalars; each invalid byte counts as one (as U+FFFD).
size_t scalar_count(std::string_view utf8);

inline bool is_c0_control(char32_t cp) { return cp < 0x20 || cp == 0x7f; }
inline bool is_c1_control(char32_t cp) { return cp >= 0x80 && cp <= 0x9f; }

inline bool is_zero_width(char32_t cp) {
    return cp == 0x200b || cp == 0x200c || cp == 0x200d || cp == 0x2060 || cp == 0xfeff;
}

}  // namespace darwin::unicode
