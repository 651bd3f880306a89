#pragma once

#include <string>
#include <string_view>

namespace wnsynth {

bool is_valid_utf8(std::string_view bytes) noexcept;

/// Canonical lemma form used for every comparison in the toolkit:
/// NFC, outer whitespace trimmed, internal whitespace runs collapsed to a
/// single space, and case-folded when every letter is Latin script.
/// Throws EncodingError on invalid UTF-8. May return an empty string.
std::string normalize_lemma(std::string_view raw);

}  // namespace wnsynth
