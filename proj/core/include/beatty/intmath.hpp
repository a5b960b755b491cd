#pragma once

#include <cstdint>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace beatty {

// All public arithmetic is arbitrary precision; fixed-width code paths are
// internal fast paths that are only taken when the result provably fits.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using u128 = unsigned __int128;
using i128 = __int128;

struct SqrtResult {
  Int root;     // floor(sqrt(x))
  bool exact;   // root * root == x
};

struct SqrtResultU64 {
  std::uint64_t root;
  bool exact;
};

struct SqrtResultU128 {
  u128 root;
  bool exact;
};

// Exact integer square root. Throws std::invalid_argument for negative input.
SqrtResult isqrt(const Int& x);
SqrtResultU64 isqrt_u64(std::uint64_t x);
SqrtResultU128 isqrt_u128(u128 x);

// Floor division (rounds toward negative infinity). den must be nonzero.
Int floor_div(const Int& num, const Int& den);
i128 floor_div_i128(i128 num, i128 den);

// Writes d = s^2 * d0 with d0 squarefree and returns {s, d0}. d must be > 0.
// Factorization is by trial division; intended for the small radicands that
// actually occur in slopes, not for cryptographic-size inputs.
std::pair<Int, Int> extract_square_factor(const Int& d);

// Conversion helpers for the 128-bit fast path.
Int int_from_i128(i128 v);
bool fits_int64(const Int& v);

int sign_of(const Int& v);

}  // namespace beatty
