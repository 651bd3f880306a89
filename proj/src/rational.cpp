#include "wnsynth/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace wnsynth {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) throw std::invalid_argument("rational denominator must be positive");
  if (numerator < 0) throw std::invalid_argument("rational numerator must be non-negative");
  auto g = std::gcd(numerator, denominator);
  if (g == 0) g = 1;
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first to keep intermediates small.
  auto g1 = std::gcd(a.num_, b.den_);
  auto g2 = std::gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

Rational operator+(const Rational& a, const Rational& b) {
  auto g = std::gcd(a.den_, b.den_);
  return Rational(a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), (a.den_ / g) * b.den_);
}

std::string Rational::to_fixed(int places) const {
  __int128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // floor(num * scale / den + 1/2)
  __int128 scaled = (static_cast<__int128>(num_) * scale * 2 + den_) / (static_cast<__int128>(den_) * 2);
  auto whole = static_cast<long long>(scaled / scale);
  auto frac = static_cast<long long>(scaled % scale);
  std::string out = std::to_string(whole);
  if (places > 0) {
    std::string digits = std::to_string(frac);
    out += '.';
    out.append(static_cast<std::size_t>(places) - digits.size(), '0');
    out += digits;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.num() << '/' << r.den();
}

}  // namespace wnsynth
