#include "beatty/sequences.hpp"

#include <memory>
#include <set>
#include <stdexcept>
#include <utility>

namespace beatty {

Sequence::Sequence(std::string name, Fn term) : name_(std::move(name)), term_(std::move(term)) {
  if (!term_) throw std::invalid_argument("sequence needs a term function");
}

Int Sequence::operator()(const Int& n) const {
  if (n < 1) throw std::invalid_argument("sequence index must be >= 1");
  return term_(n);
}

std::vector<Int> Sequence::prefix(std::size_t count) const {
  std::vector<Int> out;
  out.reserve(count);
  for (Int n = 1; n <= Int(count); ++n) out.push_back(term_(n));
  return out;
}

Int GeneralizedBeatty::term(const Int& n) const {
  return p * slope.floor_multiple(n) + q * n + r;
}

Sequence GeneralizedBeatty::to_sequence() const { return gbs(slope, p, q, r); }

Sequence beatty(const QuadraticIrrational& alpha) {
  if (!alpha.greater_than(Rat(1))) {
    throw std::invalid_argument("beatty: slope must be > 1");
  }
  return Sequence("floor(n*" + alpha.to_string() + ")",
                  [alpha](const Int& n) { return alpha.floor_multiple(n); });
}

QuadraticIrrational complementary_slope(const QuadraticIrrational& alpha) {
  if (!alpha.greater_than(Rat(1))) {
    throw std::invalid_argument("complementary slope needs alpha > 1");
  }
  // beta = alpha / (alpha - 1), rationalized with the conjugate of alpha - 1.
  const Int& a = alpha.a();
  const Int& b = alpha.b();
  const Int& d = alpha.d();
  const Int& c = alpha.c();
  const Int m = a - c;
  return QuadraticIrrational::create(a * m - b * b * d, -b * c, d, m * m - b * b * d);
}

Sequence gbs(const QuadraticIrrational& alpha, const Int& p, const Int& q, const Int& r) {
  GeneralizedBeatty g{alpha, p, q, r};
  return Sequence("(" + p.str() + ")*floor(n*" + alpha.to_string() + ")+(" + q.str() +
                      ")*n+(" + r.str() + ")",
                  [g](const Int& n) { return g.term(n); });
}

Sequence identity_sequence() {
  return Sequence("n", [](const Int& n) { return n; });
}

Sequence compose(const Sequence& outer, const Sequence& inner) {
  return Sequence(outer.name() + " . " + inner.name(),
                  [outer, inner](const Int& n) { return outer(inner(n)); });
}

Sequence delta(const Sequence& s) {
  return Sequence("delta(" + s.name() + ")",
                  [s](const Int& n) { return s(n + 1) - s(n); });
}

GbsClassification classify_aa(const QuadraticIrrational& alpha, const Int& verify_prefix) {
  if (!alpha.greater_than(Rat(1))) {
    throw std::invalid_argument("classify_aa requires slope > 1");
  }
  const MinimalPolynomial mp = alpha.minimal_polynomial();
  const QuadraticIrrational conj = alpha.conjugate();

  GbsClassification out;
  out.p = 0;
  out.q = 0;
  out.r = 0;
  out.checked_horizon = 0;
  // floor(n*alpha)*alpha = -a1*floor(n*alpha) - a0*n + conj*{n*alpha}, so the
  // defect floor(conj * {n*alpha}) is a constant exactly when |conj| < 1.
  const bool inside = conj.greater_than(Rat(-1)) && conj.less_than(Rat(1));
  if (!inside) return out;

  out.is_gbs = true;
  out.p = -mp.a1;
  out.q = -mp.a0;
  out.r = conj.greater_than(Rat(0)) ? Int(0) : Int(-1);
  out.defect_constant = out.r;
  out.checked_horizon = verify_prefix;
  for (Int n = 1; n <= verify_prefix; ++n) {
    const Int an = alpha.floor_multiple(n);
    const Int aan = alpha.floor_multiple(an);
    if (aan != out.p * an + out.q * n + out.r) {
      throw std::logic_error("classify_aa: composed values disagree with the verdict");
    }
  }
  return out;
}

namespace {

Int det3(const Int m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

GbsClassification fit_gbs(const Sequence& target, const QuadraticIrrational& alpha,
                          const Int& horizon) {
  if (horizon < 3) throw std::invalid_argument("fit_gbs: horizon too small");
  const Sequence a_seq = beatty(alpha);

  GbsClassification out;
  out.p = 0;
  out.q = 0;
  out.r = 0;
  out.checked_horizon = horizon;

  const Int max_start = horizon - 2 < 8 ? horizon - 2 : Int(8);
  for (Int start = 1; start <= max_start; ++start) {
    Int m[3][3];
    Int rhs[3];
    for (int i = 0; i < 3; ++i) {
      const Int n = start + i;
      m[i][0] = a_seq(n);
      m[i][1] = n;
      m[i][2] = 1;
      rhs[i] = target(n);
    }
    const Int det = det3(m);
    if (det == 0) continue;

    Int cand[3];
    bool integral = true;
    for (int col = 0; col < 3 && integral; ++col) {
      Int mc[3][3];
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) mc[i][j] = j == col ? rhs[i] : m[i][j];
      }
      const Int num = det3(mc);
      if (num % det != 0) {
        integral = false;
      } else {
        cand[col] = num / det;
      }
    }
    // The window pins down the only possible triple; a non-integer or failing
    // candidate refutes every triple.
    if (!integral) return out;
    for (Int n = 1; n <= horizon; ++n) {
      if (target(n) != cand[0] * a_seq(n) + cand[1] * n + cand[2]) return out;
    }
    out.is_gbs = true;
    out.p = cand[0];
    out.q = cand[1];
    out.r = cand[2];
    return out;
  }
  return out;
}

std::vector<Int> delta_alphabet(const Sequence& s, const Int& horizon) {
  std::set<Int> seen;
  Int prev = s(1);
  for (Int n = 2; n <= horizon + 1; ++n) {
    Int cur = s(n);
    seen.insert(cur - prev);
    prev = std::move(cur);
  }
  return std::vector<Int>(seen.begin(), seen.end());
}

std::vector<Int> values_up_to(const Sequence& s, const Int& bound) {
  std::vector<Int> out;
  Int prev = 0;
  bool first = true;
  for (Int n = 1;; ++n) {
    Int v;
    try {
      v = s(n);
    } catch (const std::out_of_range&) {
      break;  // finite sequence exhausted before passing the bound
    }
    if (!first && v <= prev) {
      throw std::invalid_argument("sequence is not strictly increasing");
    }
    first = false;
    if (v > bound) break;
    if (v >= 1) out.push_back(v);
    prev = std::move(v);
  }
  return out;
}

namespace {

std::size_t bound_as_size(const Int& bound) {
  if (bound < 0) throw std::invalid_argument("bound must be >= 0");
  if (bound > 100000000) throw std::invalid_argument("bound too large to materialize");
  return static_cast<std::size_t>(static_cast<std::uint64_t>(bound));
}

}  // namespace

std::vector<Int> complement_values(const Sequence& s, const Int& bound) {
  const std::size_t limit = bound_as_size(bound);
  std::vector<bool> hit(limit + 1, false);
  for (const Int& v : values_up_to(s, bound)) {
    hit[static_cast<std::size_t>(static_cast<std::uint64_t>(v))] = true;
  }
  std::vector<Int> out;
  for (std::size_t i = 1; i <= limit; ++i) {
    if (!hit[i]) out.push_back(Int(i));
  }
  return out;
}

Sequence sequence_from_values(std::string name, std::vector<Int> values) {
  auto data = std::make_shared<std::vector<Int>>(std::move(values));
  return Sequence(std::move(name), [data](const Int& n) {
    if (n > Int(data->size())) {
      throw std::out_of_range("sequence index beyond materialized values");
    }
    return (*data)[static_cast<std::size_t>(static_cast<std::uint64_t>(n)) - 1];
  });
}

Sequence complement(const Sequence& s, const Int& bound) {
  return sequence_from_values("complement(" + s.name() + ")", complement_values(s, bound));
}

bool commutator_identity_check(const Int& horizon) {
  const auto alpha = QuadraticIrrational::sqrt_of(2);
  const auto beta = complementary_slope(alpha);
  for (Int n = 1; n <= horizon; ++n) {
    const Int an = alpha.floor_multiple(n);
    const Int bn = beta.floor_multiple(n);
    const Int ab = alpha.floor_multiple(bn);
    const Int ba = beta.floor_multiple(an);
    const Int aa = alpha.floor_multiple(an);
    if (ab - ba != 2 * n - aa) return false;
  }
  return true;
}

namespace {

class DeltaWord final : public InfiniteWord {
 public:
  DeltaWord(Sequence s, Alphabet letters)
      : s_(std::move(s)), letters_(std::move(letters)), prev_(s_(1)) {}

  Symbol next() override {
    ++n_;
    Int cur = s_(n_);
    const Int diff = cur - prev_;
    prev_ = std::move(cur);
    return letters_.index_of(diff.str());
  }

  const Alphabet& alphabet() const override { return letters_; }

 private:
  Sequence s_;
  Alphabet letters_;
  Int prev_;
  Int n_ = 1;
};

}  // namespace

WordPtr delta_word(const Sequence& s, Alphabet letters) {
  return std::make_unique<DeltaWord>(s, std::move(letters));
}

}  // namespace beatty
