#include "beatty/quadratic.hpp"

#include <stdexcept>
#include <utility>

namespace beatty {

namespace {

Int gcd3(const Int& x, const Int& y, const Int& z) {
  using boost::multiprecision::gcd;
  return gcd(gcd(abs(x), abs(y)), abs(z));
}

std::uint64_t unsigned_abs64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

}  // namespace

QuadraticIrrational QuadraticIrrational::create(Int a, Int b, Int d, Int c) {
  if (c == 0) throw std::invalid_argument("quadratic irrational: zero denominator");
  if (d <= 0) throw std::invalid_argument("quadratic irrational: not irrational");
  if (b == 0) throw std::invalid_argument("quadratic irrational: rational");
  auto [square_part, squarefree] = extract_square_factor(d);
  b *= square_part;
  d = squarefree;
  if (d == 1) throw std::invalid_argument("quadratic irrational: not irrational");
  if (c < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  Int g = gcd3(a, b, c);
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  QuadraticIrrational q(std::move(a), std::move(b), std::move(d), std::move(c));
  q.init_fast_path();
  return q;
}

QuadraticIrrational QuadraticIrrational::golden_ratio() {
  return create(1, 1, 5, 2);
}

QuadraticIrrational QuadraticIrrational::sqrt_of(const Int& d) {
  return create(0, 1, d, 1);
}

void QuadraticIrrational::init_fast_path() {
  n_fast_max_ = 0;
  if (!fits_int64(a_) || !fits_int64(b_) || !fits_int64(c_) || !fits_int64(d_)) return;
  a64_ = static_cast<std::int64_t>(a_);
  b64_ = static_cast<std::int64_t>(b_);
  c64_ = static_cast<std::int64_t>(c_);
  d64_ = static_cast<std::int64_t>(d_);
  const Int cap = Int(1) << 126;
  Int lim = isqrt(cap / d_).root / abs(b_);
  if (a_ != 0) {
    Int lim_a = cap / abs(a_);
    if (lim_a < lim) lim = lim_a;
  }
  const Int hard_cap = Int(1) << 62;
  if (lim > hard_cap) lim = hard_cap;
  if (lim >= 1) n_fast_max_ = static_cast<std::uint64_t>(lim);
}

Int QuadraticIrrational::floor_multiple(const Int& n) const {
  if (n < 1) throw std::invalid_argument("floor_multiple: n must be >= 1");
  if (n_fast_max_ > 0 && n <= Int(n_fast_max_)) {
    const auto n64 = static_cast<std::uint64_t>(n);
    const i128 t = static_cast<i128>(a64_) * static_cast<i128>(n64);
    const u128 s = static_cast<u128>(unsigned_abs64(b64_)) * n64;
    const u128 radicand = s * s * static_cast<u128>(d64_);
    const auto sq = isqrt_u128(radicand);
    i128 inner;
    if (b64_ > 0) {
      inner = static_cast<i128>(sq.root);
    } else {
      inner = -static_cast<i128>(sq.root) - (sq.exact ? 0 : 1);
    }
    return int_from_i128(floor_div_i128(t + inner, static_cast<i128>(c64_)));
  }
  const Int t = a_ * n;
  const Int s = abs(b_) * n;
  const auto sq = isqrt(s * s * d_);
  Int inner;
  if (b_ > 0) {
    inner = sq.root;
  } else {
    inner = -sq.root - (sq.exact ? 0 : 1);
  }
  return floor_div(t + inner, c_);
}

QuadraticIrrational QuadraticIrrational::conjugate() const {
  return create(a_, -b_, d_, c_);
}

Rat QuadraticIrrational::trace() const { return Rat(2 * a_, c_); }

Rat QuadraticIrrational::norm() const {
  return Rat(a_ * a_ - b_ * b_ * d_, c_ * c_);
}

MinimalPolynomial QuadraticIrrational::minimal_polynomial() const {
  const Rat t = trace();
  const Rat n = norm();
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(t) != 1 || denominator(n) != 1) {
    throw std::invalid_argument("minimal polynomial not in Z[x]");
  }
  return MinimalPolynomial{-numerator(t), numerator(n)};
}

int sign_with_radical(const Int& A, const Int& B, const Int& d) {
  if (B == 0) return sign_of(A);
  if (A == 0) return sign_of(B);
  if (A > 0 && B > 0) return 1;
  if (A < 0 && B < 0) return -1;
  const Int lhs = A * A;
  const Int rhs = B * B * d;
  // Opposite signs: the larger square wins; ties mean the value is zero
  // (impossible when d is not a perfect square).
  if (lhs == rhs) return 0;
  const bool a_side_larger = lhs > rhs;
  if (A > 0) return a_side_larger ? 1 : -1;
  return a_side_larger ? -1 : 1;
}

namespace {

// Sign of B*sqrt(d1) + C*sqrt(d2) for distinct squarefree d1, d2.
int sign_radical_pair(const Int& B, const Int& d1, const Int& C, const Int& d2) {
  if (B == 0) return sign_of(C);
  if (C == 0) return sign_of(B);
  if (B > 0 && C > 0) return 1;
  if (B < 0 && C < 0) return -1;
  const Int lhs = B * B * d1;
  const Int rhs = C * C * d2;
  if (lhs == rhs) return 0;  // impossible for distinct squarefree radicands
  const bool b_side_larger = lhs > rhs;
  if (B > 0) return b_side_larger ? 1 : -1;
  return b_side_larger ? -1 : 1;
}

// Sign of A + B*sqrt(d1) + C*sqrt(d2), d1 != d2 squarefree.
int sign_two_radicals(const Int& A, const Int& B, const Int& d1, const Int& C,
                      const Int& d2) {
  const int st = sign_radical_pair(B, d1, C, d2);
  if (st == 0) return sign_of(A);
  if (A == 0) return st;
  const int sa = sign_of(A);
  if (sa == st) return sa;
  // Opposite signs: compare A^2 with (B*sqrt(d1)+C*sqrt(d2))^2, which asks for
  // the sign of U - 2BC*sqrt(d1*d2).
  const Int u = A * A - B * B * d1 - C * C * d2;
  const int s2 = sign_with_radical(u, -2 * B * C, d1 * d2);
  if (s2 == 0) return 0;  // impossible for canonical inputs
  return s2 > 0 ? sa : st;
}

std::strong_ordering ordering_from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering QuadraticIrrational::compare(const QuadraticIrrational& other) const {
  const Int A = a_ * other.c_ - other.a_ * c_;
  if (d_ == other.d_) {
    return ordering_from_sign(sign_with_radical(A, b_ * other.c_ - other.b_ * c_, d_));
  }
  return ordering_from_sign(
      sign_two_radicals(A, b_ * other.c_, d_, -other.b_ * c_, other.d_));
}

std::strong_ordering QuadraticIrrational::compare(const Rat& r) const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const Int p = numerator(r);
  const Int q = denominator(r);  // > 0 in canonical form
  return ordering_from_sign(sign_with_radical(a_ * q - p * c_, b_ * q, d_));
}

QuadraticIrrational QuadraticIrrational::plus(const Rat& r) const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const Int p = numerator(r);
  const Int q = denominator(r);
  return create(a_ * q + p * c_, b_ * q, d_, c_ * q);
}

QuadraticIrrational QuadraticIrrational::times(const Rat& r) const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const Int p = numerator(r);
  const Int q = denominator(r);
  if (p == 0) throw std::invalid_argument("times: zero multiplier yields a rational");
  return create(a_ * p, b_ * p, d_, c_ * q);
}

QuadraticIrrational QuadraticIrrational::negated() const {
  return create(-a_, -b_, d_, c_);
}

std::string QuadraticIrrational::to_string() const {
  std::string s = "(" + a_.str();
  s += b_ < 0 ? "-" : "+";
  s += Int(abs(b_)).str() + "*sqrt(" + d_.str() + "))/" + c_.str();
  return s;
}

}  // namespace beatty
