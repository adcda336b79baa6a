#include "galstruct/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace galstruct {

namespace {
constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
}  // namespace

Integer::Integer(const Big& b) { assign_big(b); }

Integer::Integer(const std::string& decimal) { assign_big(Big(decimal)); }

void Integer::assign_big(Big b) {
  if (b >= kMin && b <= kMax) {
    small_ = static_cast<std::int64_t>(b);
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_shared<const Big>(std::move(b));
  }
}

Integer::Big Integer::to_big() const { return big_ ? *big_ : Big(small_); }

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("Integer does not fit in int64: " + str());
  return small_;
}

double Integer::to_double() const {
  return big_ ? static_cast<double>(*big_) : static_cast<double>(small_);
}

std::string Integer::str() const { return big_ ? big_->str() : std::to_string(small_); }

int Integer::sign() const noexcept {
  if (big_) return big_->sign();
  return (small_ > 0) - (small_ < 0);
}

Integer& Integer::operator+=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign_big(to_big() + o.to_big());
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign_big(to_big() - o.to_big());
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign_big(to_big() * o.to_big());
  return *this;
}

Integer& Integer::operator/=(const Integer& o) {
  if (o.is_zero()) throw std::domain_error("Integer division by zero");
  if (!big_ && !o.big_ && !(small_ == kMin && o.small_ == -1)) {
    small_ /= o.small_;
    return *this;
  }
  assign_big(to_big() / o.to_big());
  return *this;
}

Integer& Integer::operator%=(const Integer& o) {
  if (o.is_zero()) throw std::domain_error("Integer modulo by zero");
  if (!big_ && !o.big_) {
    if (o.small_ == -1) {
      small_ = 0;
    } else {
      small_ %= o.small_;
    }
    return *this;
  }
  assign_big(to_big() % o.to_big());
  return *this;
}

Integer Integer::operator-() const {
  Integer r;
  r -= *this;
  return r;
}

bool operator==(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // normalized: a big value never fits in int64
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  const int c = a.to_big().compare(b.to_big());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0))) q -= 1;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r.sign() < 0) r += abs(m);
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && a.small_value() != kMin && b.small_value() != kMin) {
    std::int64_t x = a.small_value() < 0 ? -a.small_value() : a.small_value();
    std::int64_t y = b.small_value() < 0 ? -b.small_value() : b.small_value();
    while (y != 0) {
      std::int64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  return Integer(boost::multiprecision::gcd(a.to_big(), b.to_big()));
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return abs(a / gcd(a, b) * b);
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r.sign() < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace galstruct
