#include "beatty/fibonacci.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

namespace beatty {

namespace {

std::size_t to_index(const Int& x) {
  if (x < 0) throw std::invalid_argument("bound must be nonnegative");
  if (x > 100000000) throw std::invalid_argument("bound too large to materialize");
  return static_cast<std::size_t>(static_cast<std::uint64_t>(x));
}

Int letter_value(const Alphabet& letters, Symbol s, const Int& a, const Int& b) {
  const std::string& name = letters.name_of(s);
  if (name == "a") return a;
  if (name == "b") return b;
  throw std::invalid_argument("block base must use letters \"a\" and \"b\"");
}

// Builds a decoration morphism whose codomain letters are the distinct jump
// values, named by their decimal value, in ascending order.
Morphism decoration_from_values(const Alphabet& domain,
                                const std::vector<std::vector<Int>>& images) {
  std::set<Int> distinct;
  for (const auto& image : images) distinct.insert(image.begin(), image.end());
  std::vector<std::string> names;
  for (const Int& v : distinct) names.push_back(v.str());
  Alphabet codomain(names);
  std::vector<Word> words;
  for (const auto& image : images) {
    Word w;
    for (const Int& v : image) w.push_back(codomain.index_of(v.str()));
    words.push_back(std::move(w));
  }
  return Morphism(domain, codomain, std::move(words));
}

std::vector<Int> rep_then(int ones, std::initializer_list<Int> tail) {
  std::vector<Int> out(static_cast<std::size_t>(ones), Int(1));
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

std::vector<Int> cat(std::initializer_list<std::vector<Int>> parts) {
  std::vector<Int> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace

Morphism fib_f() { return Morphism::from_rules({{"a", {"a", "b"}}, {"b", {"a"}}}); }

Morphism fib_fbar() { return Morphism::from_rules({{"a", {"b", "a"}}, {"b", {"a"}}}); }

Morphism fib_g() {
  return Morphism::from_rules({{"a", {"b", "a", "a"}}, {"b", {"b", "a"}}});
}

Morphism fib_h() {
  return Morphism::from_rules({{"a", {"a", "a", "b"}}, {"b", {"a", "b"}}});
}

Morphism fib_g2hat() {
  return Morphism::from_rules(
      {{"1", {"1", "2"}}, {"2", {"1", "3", "2"}}, {"3", {"1", "3", "2"}}});
}

ImagePair image_pair(const Int& a, const Int& b) {
  if (a < 1 || b < 1) throw std::invalid_argument("image_pair: a and b must be >= 1");
  const auto phi = QuadraticIrrational::golden_ratio();
  GeneralizedBeatty g1{phi, a - b, 2 * b - a, 0};
  GeneralizedBeatty g2{phi, a - b, 2 * b - a, a - b};
  return {std::move(g1), std::move(g2)};
}

std::vector<Int> fib_language_oracle(const Int& a, const Int& b, const Int& bound) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("fib_language_oracle: a and b must be >= 1");
  }
  const std::size_t limit = to_index(bound);
  std::vector<bool> hit(limit + 1, false);
  // Zero runs in the fixed point of a -> ab, b -> a have length 1 or 2, and a
  // factor with k ones exists exactly for the lengths between the tightest
  // and loosest windows around k consecutive ones; both bounds are floors of
  // multiples of (3 + sqrt(5)) / 2, the position slope of the ones.
  const auto ones_slope = QuadraticIrrational::create(3, 1, 5, 2);
  for (Int k = 0;; ++k) {
    if (k > 0 && k * b > bound) break;  // every k-ones factor is worth >= k*b
    const Int min_len = k <= 1 ? Int(1) : ones_slope.floor_multiple(k - 1) + 1;
    const Int max_len = ones_slope.floor_multiple(k + 1);
    for (Int len = min_len; len <= max_len; ++len) {
      const Int value = a * (len - k) + b * k;
      if (value > bound) break;
      if (value >= 1) hit[to_index(value)] = true;
    }
  }
  std::vector<Int> out;
  for (std::size_t v = 1; v <= limit; ++v) {
    if (hit[v]) out.push_back(Int(v));
  }
  return out;
}

namespace {

std::vector<bool> image_mask(const Int& a, const Int& b, const Int& bound) {
  const std::size_t limit = to_index(bound);
  std::vector<bool> hit(limit + 1, false);
  const ImagePair pair = image_pair(a, b);
  for (const GeneralizedBeatty* g : {&pair.g1, &pair.g2}) {
    for (Int n = 1;; ++n) {
      const Int v = g->term(n);
      if (v > bound) break;
      if (v >= 1) hit[to_index(v)] = true;
    }
  }
  return hit;
}

}  // namespace

std::vector<Int> image_values(const Int& a, const Int& b, const Int& bound) {
  const auto hit = image_mask(a, b, bound);
  std::vector<Int> out;
  for (std::size_t v = 1; v < hit.size(); ++v) {
    if (hit[v]) out.push_back(Int(v));
  }
  return out;
}

std::vector<Int> complement_sieve(const Int& a, const Int& b, const Int& bound) {
  const auto hit = image_mask(a, b, bound);
  std::vector<Int> out;
  for (std::size_t v = 1; v < hit.size(); ++v) {
    if (!hit[v]) out.push_back(Int(v));
  }
  return out;
}

bool is_degenerate(const Int& a, const Int& b) {
  Int window = 64 * (a + b) + 64;
  if (window < 2000) window = 2000;
  const auto comp = complement_sieve(a, b, window);
  const Int half = window / 2;
  return std::none_of(comp.begin(), comp.end(),
                      [&half](const Int& v) { return v > half; });
}

namespace {

struct BlockScan {
  bool ok = false;
  std::string error;
  std::optional<Morphism> decoration;
};

// Walks `block_count` blocks of the fixed point of base, block i spanning the
// values of base^power applied to the i-th directive letter, and extracts the
// per-letter complement offset patterns. Fails when a block misses the
// complement entirely or when patterns disagree between same-letter blocks
// (including the shared first offset).
BlockScan scan_blocks(const Int& a, const Int& b, const Morphism& base, int power) {
  const Alphabet& domain = base.domain();
  const Symbol seed = base.default_seed();
  const int block_count = 240;

  std::vector<Word> power_image(static_cast<std::size_t>(domain.size()));
  std::vector<Int> span(static_cast<std::size_t>(domain.size()));
  for (Symbol s = 0; s < domain.size(); ++s) {
    Word w{s};
    for (int i = 0; i < power; ++i) w = base.apply(w);
    Int total = 0;
    for (Symbol t : w) total += letter_value(domain, t, a, b);
    power_image[static_cast<std::size_t>(s)] = std::move(w);
    span[static_cast<std::size_t>(s)] = total;
  }

  const Word directive = fixed_point(base, seed)->take(block_count);
  Int bound = 0;
  for (Symbol s : directive) bound += span[static_cast<std::size_t>(s)];
  const auto comp = complement_sieve(a, b, bound);

  std::vector<std::optional<std::vector<Int>>> pattern(
      static_cast<std::size_t>(domain.size()));
  std::optional<Int> first_offset;
  std::size_t ci = 0;
  Int pos = 0;
  for (int i = 0; i < block_count; ++i) {
    const Symbol s = directive[static_cast<std::size_t>(i)];
    const Int end = pos + span[static_cast<std::size_t>(s)];
    std::vector<Int> offsets;
    while (ci < comp.size() && comp[ci] <= end) {
      offsets.push_back(comp[ci] - pos);
      ++ci;
    }
    const std::string where = " at block " + std::to_string(i + 1);
    if (offsets.empty()) return {false, "empty block pattern" + where, std::nullopt};
    if (!first_offset) {
      first_offset = offsets.front();
    } else if (offsets.front() != *first_offset) {
      return {false, "pattern inconsistency" + where, std::nullopt};
    }
    auto& expected = pattern[static_cast<std::size_t>(s)];
    if (!expected) {
      expected = offsets;
    } else if (*expected != offsets) {
      return {false, "pattern inconsistency" + where, std::nullopt};
    }
    pos = end;
  }

  std::vector<std::vector<Int>> images;
  for (Symbol s = 0; s < domain.size(); ++s) {
    const auto& offsets = pattern[static_cast<std::size_t>(s)];
    if (!offsets) {
      return {false,
              "letter \"" + domain.name_of(s) + "\" missing from the directive prefix",
              std::nullopt};
    }
    std::vector<Int> image;
    for (std::size_t i = 1; i < offsets->size(); ++i) {
      image.push_back((*offsets)[i] - (*offsets)[i - 1]);
    }
    image.push_back(span[static_cast<std::size_t>(s)] - offsets->back() + *first_offset);
    images.push_back(std::move(image));
  }
  return {true, "", decoration_from_values(domain, images)};
}

}  // namespace

DerivedDecoration derive_decoration(const Int& a, const Int& b, const Morphism& base,
                                    int block_power) {
  if (block_power < 0 || block_power > 2) {
    throw std::invalid_argument("derive_decoration: block_power must be in [0, 2]");
  }
  std::string last_error;
  for (int power = block_power; power <= 2; ++power) {
    BlockScan scan = scan_blocks(a, b, base, power);
    if (scan.ok) return {std::move(*scan.decoration), power};
    last_error = std::move(scan.error);
  }
  throw std::runtime_error("derive_decoration: " + last_error);
}

ComplementDescription complement_description(const Int& a, const Int& b) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("complement_description: a and b must be >= 1");
  }
  if (is_degenerate(a, b)) {
    throw std::domain_error("complement_description: complement is finite");
  }
  const Morphism h = fib_h();
  const Morphism g = fib_g();

  if (a == 3 && b == 1) {
    return {a,
            b,
            h,
            h.domain().index_of("a"),
            decoration_from_values(h.domain(), {{Int(7), Int(11)}, {Int(11)}}),
            ComplementCase::kThreeOne,
            2};
  }
  if (b == 1 && a >= 4) {
    const int m = static_cast<int>(a);
    const auto da = cat({rep_then(m - 3, {Int(4)}), rep_then(m - 4, {Int(4)}),
                         rep_then(m - 3, {Int(4)}), rep_then(m - 4, {Int(5)}),
                         rep_then(m - 4, {Int(4)})});
    const auto db = cat({rep_then(m - 3, {Int(4)}), rep_then(m - 4, {Int(5)}),
                         rep_then(m - 4, {Int(4)})});
    return {a,      b,
            h,      h.domain().index_of("a"),
            decoration_from_values(h.domain(), {da, db}),
            ComplementCase::kUnitB,
            2};
  }
  if (a == 1 && b >= 5) {
    const int m = static_cast<int>(b);
    const auto da = cat({rep_then(m - 4, {Int(6)}), rep_then(m - 5, {Int(7)}),
                         rep_then(m - 5, {Int(6)})});
    const auto db = cat({rep_then(m - 4, {Int(6)}), rep_then(m - 5, {Int(6)})});
    return {a,      b,
            g,      g.domain().index_of("b"),
            decoration_from_values(g.domain(), {da, db}),
            ComplementCase::kUnitA,
            2};
  }
  if (a + 2 < 2 * b + 1 && 2 * b + 1 < 2 * a - 1) {
    const int ia = static_cast<int>(a), ib = static_cast<int>(b);
    const auto da = cat({rep_then(ib - 2, {Int(2)}), rep_then(ia - ib - 2, {Int(2)})});
    const auto db =
        cat({rep_then(2 * ib - ia - 2, {Int(2)}), rep_then(ia - ib - 2, {Int(2)})});
    return {a,      b,
            h,      h.domain().index_of("a"),
            decoration_from_values(h.domain(), {da, db}),
            ComplementCase::kMiddleBand,
            0};
  }

  const bool on_h = a >= b;
  const Morphism& base = on_h ? h : g;
  DerivedDecoration derived = derive_decoration(a, b, base, 0);
  return {a,
          b,
          base,
          base.default_seed(),
          std::move(derived.decoration),
          on_h ? ComplementCase::kDerivedH : ComplementCase::kDerivedG,
          derived.block_power};
}

ComplementDescription alternative_on_xg(const ComplementDescription& d) {
  if (!(d.base == fib_h())) {
    throw std::invalid_argument(
        "alternative_on_xg: description must decorate the fixed point of h");
  }
  const Morphism g = fib_g();
  // The fixed point of h is the f-image of the fixed point of g, so composing
  // the decoration with f spells the same decorated word over g's fixed point.
  Morphism relabeled = compose_morphisms(d.decoration, fib_f());
  return {d.a,       d.b,
          g,         g.domain().index_of("b"),
          std::move(relabeled),
          d.tag,     d.block_power};
}

bool verify_complement(const Int& a, const Int& b, const Int& horizon) {
  Int cross_bound = 2000 + 40 * (a + b);
  if (cross_bound > 10000) cross_bound = 10000;
  if (fib_language_oracle(a, b, cross_bound) != image_values(a, b, cross_bound)) {
    return false;
  }

  const ComplementDescription desc = complement_description(a, b);

  Int bound = 64 + (horizon + 2) * (a + b);
  std::vector<Int> comp;
  while (true) {
    comp = complement_sieve(a, b, bound);
    if (Int(comp.size()) > horizon) break;
    bound *= 2;
  }

  auto stream = decorate(desc.base, desc.seed, desc.decoration);
  const Alphabet& letters = stream->alphabet();
  const std::size_t steps = to_index(horizon);
  for (std::size_t i = 0; i < steps; ++i) {
    if (comp[i + 1] - comp[i] != letters.value_of(stream->next())) return false;
  }
  return true;
}

}  // namespace beatty
