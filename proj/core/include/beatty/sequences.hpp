#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "beatty/morphism.hpp"
#include "beatty/quadratic.hpp"

namespace beatty {

// An integer sequence indexed from 1. Terms are computed on demand; carriers
// are cheap to copy (the term function is shared).
class Sequence {
 public:
  using Fn = std::function<Int(const Int&)>;

  Sequence(std::string name, Fn term);

  const std::string& name() const { return name_; }
  // n >= 1 (throws std::invalid_argument otherwise).
  Int operator()(const Int& n) const;
  std::vector<Int> prefix(std::size_t count) const;

 private:
  std::string name_;
  Fn term_;
};

// n -> p * floor(n * slope) + q * n + r.
struct GeneralizedBeatty {
  QuadraticIrrational slope;
  Int p, q, r;

  Int term(const Int& n) const;
  Sequence to_sequence() const;
};

// n -> floor(n * alpha); requires alpha > 1.
Sequence beatty(const QuadraticIrrational& alpha);

// The slope beta with 1/alpha + 1/beta = 1; requires alpha > 1.
QuadraticIrrational complementary_slope(const QuadraticIrrational& alpha);

Sequence gbs(const QuadraticIrrational& alpha, const Int& p, const Int& q, const Int& r);
Sequence identity_sequence();
Sequence compose(const Sequence& outer, const Sequence& inner);
// First difference n -> s(n + 1) - s(n).
Sequence delta(const Sequence& s);

struct GbsClassification {
  bool is_gbs = false;
  Int p, q, r;                        // meaningful when is_gbs
  std::optional<Int> defect_constant; // the constant value of the defect term
  Int checked_horizon;                // prefix length actually verified
};

// Decides whether n -> floor(floor(n*alpha)*alpha) equals p*floor(n*alpha) +
// q*n + r, by the size of the algebraic conjugate. Requires alpha > 1 with an
// integer minimal polynomial (std::invalid_argument otherwise). The verdict
// is re-verified against direct composition on the first verify_prefix terms;
// a mismatch (impossible for correct arithmetic) throws std::logic_error.
GbsClassification classify_aa(const QuadraticIrrational& alpha,
                              const Int& verify_prefix = 1000);

// Fits integer (p, q, r) with target(n) = p*floor(n*alpha) + q*n + r by
// solving a 3x3 window (start sliding over 1..8) and checking the candidate
// on 1..horizon. horizon < 3 throws ("horizon too small").
GbsClassification fit_gbs(const Sequence& target, const QuadraticIrrational& alpha,
                          const Int& horizon);

// Distinct values of s(n+1) - s(n) for n in [1, horizon], sorted.
std::vector<Int> delta_alphabet(const Sequence& s, const Int& horizon);

// Values of s that lie in [1, bound]; s must be strictly increasing there
// (throws std::invalid_argument otherwise). A finite sequence that raises
// std::out_of_range before passing the bound is treated as exhausted.
std::vector<Int> values_up_to(const Sequence& s, const Int& bound);

// The elements of [1, bound] missed by s, as a vector or as a finite
// sequence (indexing past the end throws std::out_of_range).
std::vector<Int> complement_values(const Sequence& s, const Int& bound);
Sequence complement(const Sequence& s, const Int& bound);
Sequence sequence_from_values(std::string name, std::vector<Int> values);

// Checks AB(n) - BA(n) = 2n - AA(n) for n in [1, horizon], where A has slope
// sqrt(2) and B is its complementary sequence. Vacuously true for horizon 0.
bool commutator_identity_check(const Int& horizon);

// Letters of the first-difference word of s, n = 1, 2, ...; each difference
// must be the numeric value of a letter of `letters`.
WordPtr delta_word(const Sequence& s, Alphabet letters);

}  // namespace beatty
