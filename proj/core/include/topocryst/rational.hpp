#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace topocryst {

/// Exact rational number over checked 64-bit integers.
///
/// Kept fully reduced with a positive denominator, so defaulted equality is
/// exact value equality. Arithmetic runs through 128-bit intermediates and
/// throws std::overflow_error if a reduced result does not fit in 64 bits.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n) {}  // NOLINT: implicit by design
  Rational(long long n, long long d);

  /// Parses "p" or "p/q" with an optional leading sign.
  static Rational parse(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string str() const;

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational make(__int128 n, __int128 d);

  long long num_ = 0;
  long long den_ = 1;
};

inline Rational abs(const Rational& x) { return x.num() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace topocryst
