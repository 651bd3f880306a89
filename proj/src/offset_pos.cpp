#include "wnsynth/offset_pos.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace wnsynth {

namespace {

bool all_digits(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::uint32_t to_number(std::string_view digits) {
  std::uint32_t value = 0;
  for (char c : digits) value = value * 10 + static_cast<std::uint32_t>(c - '0');
  return value;
}

}  // namespace

std::optional<Pos> pos_from_char(char c) noexcept {
  switch (c) {
    case 'n': return Pos::Noun;
    case 'v': return Pos::Verb;
    case 'a': return Pos::Adjective;
    case 'r': return Pos::Adverb;
    case 's': return Pos::Satellite;
    default: return std::nullopt;
  }
}

std::optional<OffsetPos> OffsetPos::parse(std::string_view text) noexcept {
  if (text.size() != 10 || text[8] != '-') return std::nullopt;
  auto digits = text.substr(0, 8);
  if (!all_digits(digits)) return std::nullopt;
  auto pos = pos_from_char(text[9]);
  if (!pos) return std::nullopt;
  return OffsetPos(to_number(digits), *pos);
}

OffsetPos OffsetPos::from_parts(std::string_view offset, Pos pos) {
  if (offset.size() != 8 || !all_digits(offset))
    throw std::invalid_argument("offset must be 8 decimal digits: '" + std::string(offset) + "'");
  return OffsetPos(to_number(offset), pos);
}

std::string OffsetPos::offset_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08u", static_cast<unsigned>(offset_));
  return buf;
}

std::string OffsetPos::str() const {
  auto s = offset_string();
  s += '-';
  s += to_char(pos_);
  return s;
}

std::ostream& operator<<(std::ostream& os, const OffsetPos& id) { return os << id.str(); }

}  // namespace wnsynth
