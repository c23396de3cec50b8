#include "langdist/unicode.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include "langdist/errors.hpp"

namespace langdist::uni {

namespace {

const icu::Normalizer2& nfc_instance() {
  UErrorCode ec = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(ec);
  if (U_FAILURE(ec) || n == nullptr)
    throw Error("ICU NFC normalizer unavailable");
  return *n;
}

}  // namespace

bool is_valid_utf8(std::string_view bytes) {
  // Hand-rolled validator: ICU's converters substitute rather than reject,
  // and the file parsers need a hard yes/no.
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(bytes[i]);
    if (c < 0x80) {
      ++i;
      continue;
    }
    int len;
    unsigned cp;
    if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1Fu;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0Fu;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07u;
    } else {
      return false;
    }
    if (i + len > n) return false;
    for (int k = 1; k < len; ++k) {
      unsigned char cc = static_cast<unsigned char>(bytes[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3Fu);
    }
    static const unsigned kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len]) return false;              // overlong
    if (cp > 0x10FFFF) return false;               // out of range
    if (cp >= 0xD800 && cp <= 0xDFFF) return false;  // surrogate
    i += len;
  }
  return true;
}

std::string nfc(std::string_view utf8) {
  if (!is_valid_utf8(utf8)) throw Error("invalid UTF-8 sequence");
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  UErrorCode ec = U_ZERO_ERROR;
  icu::UnicodeString out = nfc_instance().normalize(s, ec);
  if (U_FAILURE(ec)) throw Error("NFC normalization failed");
  std::string result;
  out.toUTF8String(result);
  return result;
}

std::string lowercase(std::string_view utf8) {
  if (!is_valid_utf8(utf8)) throw Error("invalid UTF-8 sequence");
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  s.toLower(icu::Locale::getRoot());
  std::string result;
  s.toUTF8String(result);
  return result;
}

std::string normalize_word(std::string_view utf8) {
  return nfc(lowercase(nfc(utf8)));
}

}  // namespace langdist::uni
