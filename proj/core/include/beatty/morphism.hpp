#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "beatty/intmath.hpp"

namespace beatty {

// Symbols are indices into an Alphabet's name table.
using Symbol = int;
using Word = std::vector<Symbol>;

class Alphabet {
 public:
  Alphabet() = default;
  // Names must be distinct and non-empty.
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  bool contains(const std::string& name) const;
  // Throws std::invalid_argument for unknown names.
  Symbol index_of(const std::string& name) const;
  const std::string& name_of(Symbol s) const;
  // Appends a new name and returns its symbol; the name must be fresh.
  Symbol add(const std::string& name);
  // Numeric letters ("7", "-3") as integers; throws for non-numeric names.
  Int value_of(Symbol s) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Symbol> index_;
};

// A map sending each domain letter to a non-empty word over the codomain.
class Morphism {
 public:
  Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images);

  // Builds alphabets from rule text: domain letters in left-hand-side order.
  // The codomain equals the domain when the right-hand sides stay inside it
  // and produce every domain letter; otherwise it lists right-hand letters
  // in first appearance order (so a map whose images miss some domain
  // letters is a coding onto the smaller alphabet, not an endomorphism).
  static Morphism from_rules(
      const std::vector<std::pair<std::string, std::vector<std::string>>>& rules);

  // Text format: one "x -> y z ..." line per domain letter, whitespace
  // separated tokens, '#' starts a comment, blank lines ignored.
  static Morphism parse(const std::string& text);
  std::string to_text() const;

  const Alphabet& domain() const { return domain_; }
  const Alphabet& codomain() const { return codomain_; }
  const Word& image(Symbol s) const;
  const Word& image_of(const std::string& name) const;

  Word apply(const Word& w) const;
  bool is_coding() const;         // every image has length 1
  bool is_endomorphism() const { return domain_ == codomain_; }
  // True when image(s) starts with s and has length >= 2 (needs an
  // endomorphism), so iterating on s converges to an infinite fixed point.
  bool prolongable_on(Symbol s) const;
  // First prolongable domain letter; throws if none exists.
  Symbol default_seed() const;

  bool operator==(const Morphism& other) const = default;

 private:
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<Word> images_;
};

// (mu . nu)(x) = mu(nu(x)). Letters of nu's codomain are matched to mu's
// domain by name; a missing name throws std::invalid_argument.
Morphism compose_morphisms(const Morphism& mu, const Morphism& nu);

// Reverses every image. An involution; fixed points of the reversal relate
// a morphism to its mirror.
Morphism time_reversal(const Morphism& mu);

// Per-letter translation table from one alphabet into another, matched by
// name. Throws when a name is missing from `to`.
std::vector<Symbol> name_remap(const Alphabet& from, const Alphabet& to);

// Single-owner lazy stream of letters. Streams are not restartable; build a
// fresh one from its defining data to re-read.
class InfiniteWord {
 public:
  virtual ~InfiniteWord() = default;
  virtual Symbol next() = 0;
  virtual const Alphabet& alphabet() const = 0;
  Word take(std::size_t count);
  std::vector<Int> take_values(std::size_t count);
};

using WordPtr = std::unique_ptr<InfiniteWord>;

// The infinite fixed point of mu iterated on seed; mu must be prolongable on
// seed. Letters stream with memory proportional to the expansion depth, not
// to the number of letters produced.
WordPtr fixed_point(const Morphism& mu, Symbol seed);
WordPtr fixed_point(const Morphism& mu);  // default seed

// Letterwise image of a stream: pulls from `inner` and expands each letter
// through m (inner letters matched to m's domain by name).
WordPtr apply_morphism(const Morphism& m, WordPtr inner);

// decorate(base, seed, decoration) = decoration applied to the fixed point.
WordPtr decorate(const Morphism& base, Symbol seed, const Morphism& decoration);

// Fixed given letters first, then the inner stream (used to prepend seeds).
WordPtr literal_then(Word prefix, WordPtr inner);

// Codes every length-k window (sliding by one) of the inner stream.
struct BlockCoding {
  Alphabet block_alphabet;
  std::map<Word, Symbol> code;  // length-k factor -> block letter
};
WordPtr block_recode(WordPtr inner, int k, const BlockCoding& coding);

// A morphic word: coding applied to the fixed point of base at seed.
struct MorphicWord {
  Morphism base;
  Symbol seed;
  Morphism coding;
  WordPtr generate() const;
};

// Rewrites "decoration applied to a fixed point" as "letter-to-letter coding
// of another fixed point". Block letter (x, i) is named "<x>.<i>"; its coding
// is the i-th letter of decoration(x), and the base images chunk the blocks
// of mu(x) so concatenation is preserved. Squares the base up to four times
// if some letter's image carries fewer blocks than the letter itself.
MorphicWord decorated_to_morphic(const Morphism& base, Symbol seed,
                                 const Morphism& decoration);

// The induced morphism on coded length-k blocks of the fixed point at seed:
// image of code(w) reads off the codes of mu(w)'s first |mu(w[0])| windows.
// Every window reachable from the initial block must be covered by the
// coding; otherwise throws with the uncovered factor in the message.
Morphism k_block_morphism(const Morphism& mu, Symbol seed, int k,
                          const BlockCoding& coding);

struct PrefixComparison {
  bool equal = false;
  std::size_t mismatch_index = 0;  // 1-based position of first mismatch
};
// Compares the first `count` letters of two streams by name.
PrefixComparison word_equal_prefix(InfiniteWord& w1, InfiniteWord& w2,
                                   std::size_t count);

// Parses the inner stream as a concatenation of code words and emits, for
// each parsed token, the corresponding letter of `out`. When several code
// words match, candidates are filtered by whether a parse can continue for
// `lookahead` further tokens; exactly one must survive or the parse throws
// (ambiguity and dead ends are reported with their letter position).
WordPtr parse_by_code(WordPtr inner, const std::vector<Word>& code,
                      const Alphabet& out, int lookahead = 6);

}  // namespace beatty
