#pragma once

#include <string>
#include <vector>

#include "beatty/morphism.hpp"
#include "beatty/quadratic.hpp"
#include "beatty/sequences.hpp"

namespace beatty {

// The root of x^2 + (t-2)x - t in (1, 2): (2 - t + sqrt(t^2 + 4)) / 2.
struct MetallicMean {
  int t;
  QuadraticIrrational alpha;
};
MetallicMean metallic_mean(int t);  // t >= 2

// 1 -> 1^(t-1) 2, 2 -> 1^(t-1) 2 1 on {"1","2"}; its fixed point spells the
// first differences of the Beatty sequence of metallic_mean(t).
Morphism sigma_t(int t);

// Code words over {"1","2"}: u[j] (1-based j = 1..t-1), v and w. The fixed
// point of sigma_t factors as a concatenation of these.
struct CodeWords {
  std::vector<Word> u;
  Word v, w;
  Alphabet letters;
};
CodeWords code_words(int t);

struct CodeWordCheck {
  bool ok = true;
  std::string failed_identity;  // e.g. "sigma(u_2)" when ok is false
};
// Checks the exact image identities sigma(u_j), sigma(v), sigma(w) as word
// equalities (no sampling).
CodeWordCheck verify_code_words(int t);
CodeWordCheck verify_code_words_with(const Morphism& sigma, int t);

// tau on {1..t+1} re-labels the identities of verify_code_words (u_j -> j,
// v -> t, w -> t+1); delta sends each letter to the length word of its code
// word's sigma-expansion chunks, with letters over {"1","2","3"}.
struct TauDelta {
  Morphism tau;
  Morphism delta;
};
TauDelta tau_delta(int t);

// decorate(tau, delta) must reproduce the first differences of the iterated
// Beatty sequence n -> floor(floor(n*alpha)*alpha) of metallic_mean(t).
bool verify_metallic_decoration(int t, const Int& horizon);

// The length word: |x_1| |x_2| ... of the code factorization, fixed by the
// sigma shape written on letters {t+1, t+2}; equals the first differences of
// the Beatty sequence of alpha + t (the complementary slope).
Morphism length_word_morphism(int t);
bool verify_length_word(int t, const Int& horizon);

// Explicit base/coding pair for t = 3 whose coded fixed point is the first
// difference word of the iterated Beatty sequence of the bronze mean.
MorphicWord bronze_morphic_word();

// The sqrt(2) bundle: gamma (1 -> 12, 2 -> 121) lifts to gamma_e on
// {1,2,3,4} with projection pi; y = fixed point of gamma_e partitions into
// w1, w2, w3, inducing sigma with decoration delta.
struct Sqrt2System {
  Morphism gamma;
  Morphism gamma_e;
  Morphism pi;
  std::vector<Word> partition_words;  // w1, w2, w3 over gamma_e's letters
  Morphism sigma;                     // induced on {"1","2","3"}
  Morphism delta;                     // decoration into {"1","2","3"}
};
Sqrt2System sqrt2_system();

// Explicit base/coding pair whose coded fixed point is the first difference
// word of the iterated Beatty sequence of sqrt(2).
MorphicWord sqrt2_morphic_word();

// Individual checks used by the verify suites.
bool sqrt2_word_matches_delta_aa(const Int& horizon);
bool sqrt2_partition_consistent(const Int& horizon);
bool sqrt2_morphic_word_matches(const Int& horizon);
bool sqrt2_letters_alternate(const Int& horizon);
bool sqrt2_two_positions_beatty(const Int& count);
bool verify_sqrt2(const Int& horizon);

}  // namespace beatty
