#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace sigform {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.  Thin value wrapper around GMP's mpq so that expression
/// templates never leak into user code.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den);
  explicit Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den);

  /// Parses "p" or "p/q" (optional leading sign).  Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Numerator as an Integer; requires is_integer().
  Integer to_integer() const;
  /// Checked conversion to a machine integer.
  std::int64_t to_int64() const;

  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

Rational abs(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Checked conversion of an Integer to a machine integer.
std::int64_t to_int64(const Integer& z);

/// 2^k as an Integer.
Integer pow2(unsigned k);

}  // namespace sigform
