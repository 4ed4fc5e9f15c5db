#include "merchant/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace merchant {
namespace {

using wide = __int128;

wide wide_abs(wide v) { return v < 0 ? -v : v; }

bool fits(wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

wide wide_gcd(wide a, wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  if (a <= std::numeric_limits<std::uint64_t>::max() && b <= std::numeric_limits<std::uint64_t>::max()) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

Rational::Rational(int_type num, int_type den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(wide num, wide den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (fits(num) && fits(den)) {
    // Common case: stay in 64-bit arithmetic.
    auto n = static_cast<std::int64_t>(num);
    auto d = static_cast<std::int64_t>(den);
    if (const std::int64_t g = std::gcd(n, d); g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }
  wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<int_type>(num);
  r.den_ = static_cast<int_type>(den);
  return r;
}

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash), whole),
                    parse_int(text.substr(slash + 1), whole));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (negative) int_part.remove_prefix(1);
    if (frac_part.empty() || frac_part.size() > 18 || frac_part.front() == '-' ||
        frac_part.front() == '+') {
      throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
    }
    int_type scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    Rational value = Rational(int_part.empty() ? 0 : parse_int(int_part, whole)) +
                     Rational(parse_int(frac_part, whole), scale);
    return negative ? -value : value;
  }
  return Rational(parse_int(text, whole));
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational::int_type Rational::floor() const {
  int_type q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return from_wide(-static_cast<wide>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) return *this = from_wide(static_cast<wide>(num_) + rhs.num_, 1);
  wide g = wide_gcd(den_, rhs.den_);
  wide num = static_cast<wide>(num_) * (rhs.den_ / g) + static_cast<wide>(rhs.num_) * (den_ / g);
  wide den = static_cast<wide>(den_) * (rhs.den_ / g);
  return *this = from_wide(num, den);
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  // Cross-reduce first so the 128-bit products stay small.
  wide g1 = wide_gcd(num_, rhs.den_);
  wide g2 = wide_gcd(rhs.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  wide num = (static_cast<wide>(num_) / g1) * (static_cast<wide>(rhs.num_) / g2);
  wide den = (static_cast<wide>(den_) / g2) * (static_cast<wide>(rhs.den_) / g1);
  return *this = from_wide(num, den);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("division by zero");
  return *this *= from_wide(rhs.den_, rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  wide l = static_cast<wide>(lhs.num_) * rhs.den_;
  wide r = static_cast<wide>(rhs.num_) * lhs.den_;
  return l <=> r;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace merchant
