#pragma once

#include <string>
#include <string_view>

namespace langdist::uni {

// True when the byte sequence is well-formed UTF-8 (no surrogates, no
// overlong forms, no code points above U+10FFFF).
bool is_valid_utf8(std::string_view bytes);

// Canonical composition (NFC) of a UTF-8 string. Throws Error on
// malformed input.
std::string nfc(std::string_view utf8);

// Locale-independent (root locale) lowercase of a UTF-8 string.
std::string lowercase(std::string_view utf8);

// Ingestion normalization applied to every dictionary and embedding word:
// NFC, lowercase, then NFC again (lowering can reintroduce decomposable
// sequences). Idempotent.
std::string normalize_word(std::string_view utf8);

}  // namespace langdist::uni
