#pragma once

#include <string>
#include <vector>

#include "beatty/morphism.hpp"
#include "beatty/quadratic.hpp"
#include "beatty/sequences.hpp"

namespace beatty {

// The Fibonacci morphism f: a -> ab, b -> a, its time reversal, and the two
// products g = reversal(f) . f and h = f . reversal(f), all on {"a","b"}.
Morphism fib_f();
Morphism fib_fbar();
Morphism fib_g();
Morphism fib_h();
// The induced morphism on coded 2-blocks of the fixed point of g:
// ba -> 1, ab -> 2, aa -> 3.
Morphism fib_g2hat();

// Extends s(0) = a, s(1) = b, s(n) = s(n-2) + s(n-1) over all factors of the
// infinite Fibonacci word; the image splits into two generalized Beatty
// sequences with slope the golden ratio:
//   g1(n) = (a-b) floor(n*phi) + (2b-a) n     and     g2(n) = g1(n) + (a-b).
struct ImagePair {
  GeneralizedBeatty g1, g2;
};
ImagePair image_pair(const Int& a, const Int& b);

// All values a*(zeros) + b*(ones) over factor shapes actually occurring in
// the infinite Fibonacci word, up to bound, sorted. Independent of
// image_pair: uses the per-ones-count factor length ranges.
std::vector<Int> fib_language_oracle(const Int& a, const Int& b, const Int& bound);

// Sorted distinct values of g1 and g2 that lie in [1, bound].
std::vector<Int> image_values(const Int& a, const Int& b, const Int& bound);

// Sorted elements of [1, bound] hit by neither g1 nor g2.
std::vector<Int> complement_sieve(const Int& a, const Int& b, const Int& bound);

// True when the complement of the image is finite (detected empirically: no
// complement element in the upper half of a window that grows with a + b).
bool is_degenerate(const Int& a, const Int& b);

// Which construction produced the description:
//   kMiddleBand  closed form for b+2 <= a <= 2b-2 (single blocks of h),
//   kThreeOne    closed form for the pair (3, 1),
//   kUnitB       closed form for b = 1, a >= 4,
//   kUnitA       closed form for a = 1, b >= 5,
//   kDerivedH    pattern read off the sieve over blocks of h (a >= b),
//   kDerivedG    pattern read off the sieve over blocks of g (a < b).
enum class ComplementCase { kMiddleBand, kThreeOne, kUnitB, kUnitA, kDerivedH, kDerivedG };

// The complement of the image, described as a decorated fixed point: the
// first differences of the complement sequence are the decoration of the
// fixed point of base (h with seed a, or g with seed b).
struct ComplementDescription {
  Int a, b;
  Morphism base;
  Symbol seed;
  Morphism decoration;  // images over numeric letters
  ComplementCase tag;
  int block_power;      // power of the base whose images build the blocks
};

struct DerivedDecoration {
  Morphism decoration;
  int block_power;
};

// Reads the decoration off the sieve: blocks follow the fixed point of base
// with each letter spanning base^power(letter) image cells; every block must
// contain a complement element, and blocks of the same letter must carry the
// same relative pattern with a uniform first offset across all blocks.
// On failure retries with power + 1 up to 2, then throws std::runtime_error.
DerivedDecoration derive_decoration(const Int& a, const Int& b, const Morphism& base,
                                    int block_power);

// Closed forms where available, derived patterns otherwise. Throws
// std::domain_error for degenerate pairs.
ComplementDescription complement_description(const Int& a, const Int& b);

// Same word re-described over the fixed point of g via x_h = f(x_g): the new
// decoration is the old one composed with f.
ComplementDescription alternative_on_xg(const ComplementDescription& d);

// Cross-checks oracle vs image pair on a prefix, then compares the decorated
// fixed point against the sieved complement differences for `horizon`
// letters.
bool verify_complement(const Int& a, const Int& b, const Int& horizon);

}  // namespace beatty
