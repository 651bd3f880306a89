#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace wnsynth {

enum class Pos : char {
  Noun = 'n',
  Verb = 'v',
  Adjective = 'a',
  Adverb = 'r',
  Satellite = 's',
};

std::optional<Pos> pos_from_char(char c) noexcept;
inline char to_char(Pos p) noexcept { return static_cast<char>(p); }

/// PWN 3.0 synset key: an 8-digit data-file offset plus a part of speech.
/// Renders as "00006802-v".
class OffsetPos {
public:
  /// Accepts exactly "<8 digits>-<n|v|a|r|s>".
  static std::optional<OffsetPos> parse(std::string_view text) noexcept;
  /// Throws std::invalid_argument unless `offset` is exactly 8 decimal digits.
  static OffsetPos from_parts(std::string_view offset, Pos pos);

  std::uint32_t offset() const noexcept { return offset_; }
  Pos pos() const noexcept { return pos_; }
  std::string offset_string() const;
  std::string str() const;

  friend bool operator==(const OffsetPos&, const OffsetPos&) = default;
  friend std::strong_ordering operator<=>(const OffsetPos& a, const OffsetPos& b) noexcept {
    if (auto c = a.offset_ <=> b.offset_; c != 0) return c;
    return to_char(a.pos_) <=> to_char(b.pos_);
  }

private:
  OffsetPos(std::uint32_t offset, Pos pos) : offset_(offset), pos_(pos) {}

  std::uint32_t offset_;
  Pos pos_;
};

std::ostream& operator<<(std::ostream& os, const OffsetPos& id);

}  // namespace wnsynth

template <>
struct std::hash<wnsynth::OffsetPos> {
  std::size_t operator()(const wnsynth::OffsetPos& id) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{id.offset()} << 8) |
                                      static_cast<unsigned char>(wnsynth::to_char(id.pos())));
  }
};
