#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace wnsynth {

/// Exact non-negative fraction in lowest terms. Ordering is by
/// cross-multiplication, so ties between ranks are never lost to rounding.
class Rational {
public:
  constexpr Rational() = default;
  /// Throws std::invalid_argument on a zero or negative denominator or negative numerator.
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Decimal rendering rounded half-up, e.g. 2/3 -> "0.67", 1 -> "1.00".
  std::string to_fixed(int places = 2) const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator+(const Rational& a, const Rational& b);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace wnsynth
