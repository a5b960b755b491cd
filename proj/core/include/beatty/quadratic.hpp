#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "beatty/intmath.hpp"

namespace beatty {

// x^2 + a1*x + a0 with integer coefficients.
struct MinimalPolynomial {
  Int a1;
  Int a0;
  bool operator==(const MinimalPolynomial&) const = default;
};

// A real quadratic irrational (a + b*sqrt(d)) / c in canonical form:
// d squarefree and >= 2, c > 0, b != 0, gcd(a, b, c) = 1.
// Equal values have identical canonical fields.
class QuadraticIrrational {
 public:
  // Normalizes (a + b*sqrt(d)) / c. d may carry square factors; they are
  // folded into b. Throws std::invalid_argument if c = 0 ("zero denominator"),
  // if the value is rational (b = 0 after extraction, or d reduces to a
  // perfect square: "not irrational" / "rational").
  static QuadraticIrrational create(Int a, Int b, Int d, Int c);

  static QuadraticIrrational golden_ratio();          // (1 + sqrt(5)) / 2
  static QuadraticIrrational sqrt_of(const Int& d);   // sqrt(d), d nonsquare

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& d() const { return d_; }
  const Int& c() const { return c_; }

  // floor(n * value). n >= 1 (throws std::invalid_argument otherwise).
  // Uses exact integer square roots; a checked 128-bit path handles the
  // common small-field case and falls back to arbitrary precision.
  Int floor_multiple(const Int& n) const;

  // The algebraic conjugate (a - b*sqrt(d)) / c.
  QuadraticIrrational conjugate() const;

  // Throws std::invalid_argument ("minimal polynomial not in Z[x]") when
  // trace or norm is not an integer.
  MinimalPolynomial minimal_polynomial() const;

  Rat trace() const;  // value + conjugate = 2a/c
  Rat norm() const;   // value * conjugate = (a^2 - b^2 d) / c^2

  std::strong_ordering compare(const QuadraticIrrational& other) const;
  std::strong_ordering compare(const Rat& r) const;
  bool operator==(const QuadraticIrrational& other) const = default;

  bool less_than(const Rat& r) const { return compare(r) == std::strong_ordering::less; }
  bool greater_than(const Rat& r) const { return compare(r) == std::strong_ordering::greater; }

  // Exact affine arithmetic within Q(sqrt(d)).
  QuadraticIrrational plus(const Rat& r) const;
  QuadraticIrrational times(const Rat& r) const;  // r != 0
  QuadraticIrrational negated() const;

  std::string to_string() const;  // "(a+b*sqrt(d))/c"

 private:
  QuadraticIrrational(Int a, Int b, Int d, Int c)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), c_(std::move(c)) {}
  void init_fast_path();

  Int a_, b_, d_, c_;
  // 128-bit fast path for floor_multiple: valid for 1 <= n <= n_fast_max_.
  std::int64_t a64_ = 0, b64_ = 0, c64_ = 1, d64_ = 0;
  std::uint64_t n_fast_max_ = 0;
};

// Sign of A + B*sqrt(d) with d > 0 not a perfect square (exact).
int sign_with_radical(const Int& A, const Int& B, const Int& d);

}  // namespace beatty
