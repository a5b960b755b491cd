#include "beatty/intmath.hpp"

#include <stdexcept>

namespace beatty {

SqrtResult isqrt(const Int& x) {
  if (x < 0) throw std::invalid_argument("isqrt: negative argument");
  if (x == 0) return {Int(0), true};
  // Newton iteration on integers; the start value over-estimates the root.
  const unsigned bits = boost::multiprecision::msb(x);
  Int r = Int(1) << (bits / 2 + 1);
  while (true) {
    Int next = (r + x / r) >> 1;
    if (next >= r) break;
    r = next;
  }
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return {r, r * r == x};
}

// Digit-by-digit method: no division, no floating point; the remainder left
// in x decides exactness.
SqrtResultU128 isqrt_u128(u128 x) {
  u128 res = 0;
  u128 bit = static_cast<u128>(1) << 126;
  while (bit > x) bit >>= 2;
  while (bit != 0) {
    if (x >= res + bit) {
      x -= res + bit;
      res = (res >> 1) + bit;
    } else {
      res >>= 1;
    }
    bit >>= 2;
  }
  return {res, x == 0};
}

SqrtResultU64 isqrt_u64(std::uint64_t x) {
  const auto r = isqrt_u128(static_cast<u128>(x));
  return {static_cast<std::uint64_t>(r.root), r.exact};
}

Int floor_div(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("floor_div: zero divisor");
  Int q = num / den;
  Int r = num % den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

i128 floor_div_i128(i128 num, i128 den) {
  i128 q = num / den;
  i128 r = num % den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

std::pair<Int, Int> extract_square_factor(const Int& n) {
  if (n <= 0) throw std::invalid_argument("extract_square_factor: non-positive argument");
  Int square_part = 1;
  Int rest = n;
  for (Int f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      square_part *= f;
    }
  }
  return {square_part, rest};
}

Int int_from_i128(i128 v) {
  const bool neg = v < 0;
  u128 mag = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  Int hi = static_cast<std::uint64_t>(mag >> 64);
  Int result = (hi << 64) | static_cast<std::uint64_t>(mag);
  return neg ? -result : result;
}

bool fits_int64(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  return v >= lo && v <= hi;
}

int sign_of(const Int& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

}  // namespace beatty
