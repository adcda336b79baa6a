#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

namespace galstruct {

// Arbitrary-precision integer with an inline 64-bit fast path. Values that
// fit in int64_t never touch the heap; on overflow the result is promoted to
// a shared big representation and demoted again as soon as it fits.
class Integer {
public:
  using Big = boost::multiprecision::cpp_int;

  Integer() noexcept = default;
  Integer(int v) noexcept : small_(v) {}
  Integer(long v) noexcept : small_(v) {}
  Integer(long long v) noexcept : small_(v) {}
  Integer(unsigned v) noexcept : small_(v) {}
  explicit Integer(const Big& b);
  explicit Integer(const std::string& decimal);

  bool is_small() const noexcept { return !big_; }
  std::int64_t small_value() const noexcept { return small_; }
  Big to_big() const;
  // Throws std::overflow_error when the value does not fit.
  std::int64_t to_int64() const;
  long long to_ll() const { return to_int64(); }
  double to_double() const;
  std::string str() const;

  int sign() const noexcept;
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }
  bool is_unit() const noexcept { return !big_ && (small_ == 1 || small_ == -1); }

  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);
  // Truncating division, as for built-in integers.
  Integer& operator/=(const Integer& o);
  Integer& operator%=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }
  Integer operator-() const;

  friend bool operator==(const Integer& a, const Integer& b) noexcept;
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

private:
  void assign_big(Big b);

  std::int64_t small_ = 0;
  std::shared_ptr<const Big> big_;
};

Integer abs(const Integer& a);
// Floor division and the matching non-negative remainder for positive m.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& m);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g, x, y;  // g = x*a + y*b, g >= 0
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

// Reduce modulo m when m > 0; m == 0 means "no reduction" (free coordinate).
inline Integer reduce_mod(const Integer& a, const Integer& m) {
  return m.is_zero() ? a : mod_floor(a, m);
}

}  // namespace galstruct
