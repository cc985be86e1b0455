#include "darwin/unicode.hpp"

#include <unicode/unorm2.h>
#include <unicode/ustring.h>
#include <unicode/utf8.h>

#include <vector>

#include "darwin/common.hpp"

namespace darwin::unicode {

char32_t decode_scalar(std::string_view utf8, size_t& i) {
    int32_t offset = static_cast<int32_t>(i);
    UChar32 cp;
    U8_NEXT(reinterpret_cast<const uint8_t*>(utf8.data()), offset,
            static_cast<int32_t>(utf8.size()), cp);
    if (cp < 0) {
        // U8_NEXT consumed the whole ill-formed sequence; emit one
        // replacement per byte so garbled density reflects byte damage.
        i += 1;
        return 0xfffd;
    }
    i = static_cast<size_t>(offset);
    return static_cast<char32_t>(cp);
}

void append_utf8(std::string& out, char32_t cp) {
    uint8_t buf[4];
    int32_t len = 0;
    UBool err = false;
    U8_APPEND(buf, len, 4, static_cast<UChar32>(cp), err);
    if (err) {
        out += "\xef\xbf\xbd";
        return;
    }
    out.append(reinterpret_cast<char*>(buf), static_cast<size_t>(len));
}

size_t scalar_count(std::string_view utf8) {
    size_t n = 0;
    for (size_t i = 0; i < utf8.size(); ++n) decode_scalar(utf8, i);
    return n;
}

std::string nfc(std::string_view utf8) {
    // Re-encode through the scalar decoder first: normalization input must
    // be well-formed, and damage has to survive as U+FFFD, not disappear.
    std::string clean;
    clean.reserve(utf8.size());
    for (size_t i = 0; i < utf8.size();) append_utf8(clean, decode_scalar(utf8, i));

    UErrorCode status = U_ZERO_ERROR;
    const UNormalizer2* norm = unorm2_getNFCInstance(&status);
    if (U_FAILURE(status)) throw Error(errc::io_failure, "ICU NFC instance unavailable");

    std::vector<UChar> u16(clean.size() + 1);
    int32_t u16_len = 0;
    u_strFromUTF8(u16.data(), static_cast<int32_t>(u16.size()), &u16_len, clean.data(),
                  static_cast<int32_t>(clean.size()), &status);
    if (U_FAILURE(status)) throw Error(errc::io_failure, "utf8 to utf16 conversion failed");

    std::vector<UChar> out16(static_cast<size_t>(u16_len) * 2 + 16);
    int32_t out_len = unorm2_normalize(norm, u16.data(), u16_len, out16.data(),
                                       static_cast<int32_t>(out16.size()), &status);
    if (status == U_BUFFER_OVERFLOW_ERROR) {
        status = U_ZERO_ERROR;
        out16.resize(static_cast<size_t>(out_len) + 1);
        out_len = unorm2_normalize(norm, u16.data(), u16_len, out16.data(),
                                   static_cast<int32_t>(out16.size()), &status);
    }
    if (U_FAILURE(status)) throw Error(errc::io_failure, "NFC normalization failed");

    std::string out;
    out.resize(static_cast<size_t>(out_len) * 4 + 4);
    int32_t out8_len = 0;
    u_strToUTF8(out.data(), static_cast<int32_t>(out.size()), &out8_len, out16.data(), out_len,
                &status);
    if (U_FAILURE(status)) throw Error(errc::io_failure, "utf16 to utf8 conversion failed");
    out.resize(static_cast<size_t>(out8_len));
    return out;
}

}  // namespace darwin::unicode
