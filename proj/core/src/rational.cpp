#include "topocryst/rational.hpp"

#include <limits>
#include <ostream>

namespace topocryst {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational Rational::make(__int128 n, __int128 d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  constexpr __int128 lo = std::numeric_limits<long long>::min();
  constexpr __int128 hi = std::numeric_limits<long long>::max();
  if (n < lo || n > hi || d > hi)
    throw std::overflow_error("rational arithmetic overflow");
  Rational r;
  r.num_ = static_cast<long long>(n);
  r.den_ = static_cast<long long>(d);
  return r;
}

Rational::Rational(long long n, long long d) { *this = make(n, d); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::make(
      static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
      static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::make(
      static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
      static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::make(static_cast<__int128>(a.num_) * b.num_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("rational division by zero");
  return Rational::make(static_cast<__int128>(a.num_) * b.den_,
                        static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> long long {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("sign without digits");
    __int128 v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("bad rational literal: " + std::string(s));
      v = v * 10 + (s[i] - '0');
      if (v > static_cast<__int128>(std::numeric_limits<long long>::max()))
        throw std::overflow_error("integer literal out of range");
    }
    return neg ? -static_cast<long long>(v) : static_cast<long long>(v);
  };

  size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  long long n = parse_int(text.substr(0, slash));
  long long d = parse_int(text.substr(slash + 1));
  return Rational(n, d);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.str();
}

}  // namespace topocryst
