#ifndef MERCHANT_RATIONAL_HPP
#define MERCHANT_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace merchant {

/// Exact rational number over 64-bit integers.
///
/// Always kept in lowest terms with a positive denominator. Intermediate
/// products are formed in 128 bits; a result that does not fit back into
/// 64 bits throws std::overflow_error rather than wrapping.
class Rational {
 public:
  using int_type = std::int64_t;

  constexpr Rational() = default;

  template <std::integral I>
  constexpr Rational(I value)  // NOLINT(google-explicit-constructor)
      : num_(static_cast<int_type>(value)) {}

  Rational(int_type num, int_type den);

  /// Accepts "p", "p/q", or a finite decimal such as "1.5" or "-0.25".
  static Rational parse(std::string_view text);

  int_type num() const { return num_; }
  int_type den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  double to_double() const;

  /// Largest integer not above the value.
  int_type floor() const;

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  int_type num_ = 0;
  int_type den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

inline Rational abs(const Rational& value) { return value < 0 ? -value : value; }

}  // namespace merchant

#endif  // MERCHANT_RATIONAL_HPP
