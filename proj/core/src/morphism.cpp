#include "beatty/morphism.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace beatty {

Alphabet::Alphabet(std::vector<std::string> names) {
  for (auto& name : names) add(name);
}

bool Alphabet::contains(const std::string& name) const {
  return index_.find(name) != index_.end();
}

Symbol Alphabet::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw std::invalid_argument("alphabet has no letter \"" + name + "\"");
  }
  return it->second;
}

const std::string& Alphabet::name_of(Symbol s) const {
  if (s < 0 || s >= size()) throw std::invalid_argument("symbol out of range");
  return names_[static_cast<std::size_t>(s)];
}

Symbol Alphabet::add(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("alphabet letters need non-empty names");
  if (contains(name)) throw std::invalid_argument("duplicate letter \"" + name + "\"");
  const Symbol s = size();
  names_.push_back(name);
  index_.emplace(name, s);
  return s;
}

Int Alphabet::value_of(Symbol s) const {
  const std::string& name = name_of(s);
  try {
    return Int(name);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("letter \"" + name + "\" has no numeric value");
  }
}

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(domain_.size())) {
    throw std::invalid_argument("morphism needs exactly one image per domain letter");
  }
  for (const Word& im : images_) {
    if (im.empty()) throw std::invalid_argument("morphism images must be non-empty");
    for (Symbol s : im) {
      if (s < 0 || s >= codomain_.size()) {
        throw std::invalid_argument("morphism image letter outside codomain");
      }
    }
  }
}

Morphism Morphism::from_rules(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& rules) {
  if (rules.empty()) throw std::invalid_argument("morphism needs at least one rule");
  Alphabet domain;
  for (const auto& [lhs, rhs] : rules) {
    (void)rhs;
    domain.add(lhs);
  }
  // Endomorphism convention: reuse the domain as codomain only when the
  // right-hand sides both stay inside it and produce every domain letter;
  // a map whose images miss letters is a coding onto the smaller alphabet.
  bool endo = true;
  std::set<std::string> produced;
  for (const auto& [lhs, rhs] : rules) {
    (void)lhs;
    for (const std::string& t : rhs) {
      if (!domain.contains(t)) {
        endo = false;
        break;
      }
      produced.insert(t);
    }
    if (!endo) break;
  }
  if (endo && static_cast<int>(produced.size()) != domain.size()) endo = false;
  Alphabet codomain;
  if (endo) {
    codomain = domain;
  } else {
    for (const auto& [lhs, rhs] : rules) {
      (void)lhs;
      for (const std::string& t : rhs) {
        if (!codomain.contains(t)) codomain.add(t);
      }
    }
  }
  std::vector<Word> images;
  images.reserve(rules.size());
  for (const auto& [lhs, rhs] : rules) {
    (void)lhs;
    Word im;
    im.reserve(rhs.size());
    for (const std::string& t : rhs) im.push_back(codomain.index_of(t));
    images.push_back(std::move(im));
  }
  return Morphism(std::move(domain), std::move(codomain), std::move(images));
}

Morphism Morphism::parse(const std::string& text) {
  std::vector<std::pair<std::string, std::vector<std::string>>> rules;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::vector<std::string> toks;
    std::string tok;
    while (tokens >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks.size() < 3 || toks[1] != "->") {
      throw std::invalid_argument("morphism parse: expected \"letter -> letter...\" at line " +
                                  std::to_string(line_no));
    }
    if (!seen.insert(toks[0]).second) {
      throw std::invalid_argument("morphism parse: duplicate rule for \"" + toks[0] +
                                  "\" at line " + std::to_string(line_no));
    }
    rules.emplace_back(toks[0], std::vector<std::string>(toks.begin() + 2, toks.end()));
  }
  if (rules.empty()) throw std::invalid_argument("morphism parse: no rules found");
  return from_rules(rules);
}

std::string Morphism::to_text() const {
  std::string out;
  for (Symbol s = 0; s < domain_.size(); ++s) {
    out += domain_.name_of(s);
    out += " ->";
    for (Symbol t : image(s)) {
      out += ' ';
      out += codomain_.name_of(t);
    }
    out += '\n';
  }
  return out;
}

const Word& Morphism::image(Symbol s) const {
  if (s < 0 || s >= domain_.size()) throw std::invalid_argument("symbol out of range");
  return images_[static_cast<std::size_t>(s)];
}

const Word& Morphism::image_of(const std::string& name) const {
  return image(domain_.index_of(name));
}

Word Morphism::apply(const Word& w) const {
  Word out;
  for (Symbol s : w) {
    const Word& im = image(s);
    out.insert(out.end(), im.begin(), im.end());
  }
  return out;
}

bool Morphism::is_coding() const {
  return std::all_of(images_.begin(), images_.end(),
                     [](const Word& im) { return im.size() == 1; });
}

bool Morphism::prolongable_on(Symbol s) const {
  if (!is_endomorphism()) return false;
  const Word& im = image(s);
  return im.size() >= 2 && im[0] == s;
}

Symbol Morphism::default_seed() const {
  for (Symbol s = 0; s < domain_.size(); ++s) {
    if (prolongable_on(s)) return s;
  }
  throw std::invalid_argument("morphism is not prolongable on any letter");
}

std::vector<Symbol> name_remap(const Alphabet& from, const Alphabet& to) {
  std::vector<Symbol> map(static_cast<std::size_t>(from.size()));
  for (Symbol s = 0; s < from.size(); ++s) {
    map[static_cast<std::size_t>(s)] = to.index_of(from.name_of(s));
  }
  return map;
}

Morphism compose_morphisms(const Morphism& mu, const Morphism& nu) {
  const auto remap = name_remap(nu.codomain(), mu.domain());
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(nu.domain().size()));
  for (Symbol s = 0; s < nu.domain().size(); ++s) {
    Word out;
    for (Symbol t : nu.image(s)) {
      const Word& im = mu.image(remap[static_cast<std::size_t>(t)]);
      out.insert(out.end(), im.begin(), im.end());
    }
    images.push_back(std::move(out));
  }
  return Morphism(nu.domain(), mu.codomain(), std::move(images));
}

Morphism time_reversal(const Morphism& mu) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(mu.domain().size()));
  for (Symbol s = 0; s < mu.domain().size(); ++s) {
    Word im = mu.image(s);
    std::reverse(im.begin(), im.end());
    images.push_back(std::move(im));
  }
  return Morphism(mu.domain(), mu.codomain(), std::move(images));
}

Word InfiniteWord::take(std::size_t count) {
  Word out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next());
  return out;
}

std::vector<Int> InfiniteWord::take_values(std::size_t count) {
  std::vector<Int> out;
  out.reserve(count);
  const Alphabet& alpha = alphabet();
  for (std::size_t i = 0; i < count; ++i) out.push_back(alpha.value_of(next()));
  return out;
}

namespace {

class FixedPointWord final : public InfiniteWord {
 public:
  FixedPointWord(Morphism mu, Symbol seed) : mu_(std::move(mu)), seed_(seed) {
    if (!mu_.prolongable_on(seed_)) {
      throw std::invalid_argument("fixed point needs a prolongable seed letter");
    }
    const Word& im = mu_.image(seed_);
    tail_.assign(im.begin() + 1, im.end());
  }

  // x = seed . tail . mu(tail) . mu^2(tail) . ... ; each mu^k(tail) streams
  // through a depth-k expansion stack.
  Symbol next() override {
    if (!emitted_seed_) {
      emitted_seed_ = true;
      return seed_;
    }
    while (true) {
      if (stack_.empty()) {
        ++stage_;
        stack_.push_back(Frame{&tail_, 0, stage_});
      }
      Frame& top = stack_.back();
      if (top.pos == top.word->size()) {
        stack_.pop_back();
        continue;
      }
      const Symbol s = (*top.word)[top.pos++];
      if (top.level == 0) return s;
      const int level = top.level;
      stack_.push_back(Frame{&mu_.image(s), 0, level - 1});
    }
  }

  const Alphabet& alphabet() const override { return mu_.domain(); }

 private:
  struct Frame {
    const Word* word;
    std::size_t pos;
    int level;
  };
  Morphism mu_;
  Symbol seed_;
  Word tail_;
  std::vector<Frame> stack_;
  int stage_ = -1;
  bool emitted_seed_ = false;
};

class ApplyStream final : public InfiniteWord {
 public:
  ApplyStream(Morphism m, WordPtr inner)
      : m_(std::move(m)),
        inner_(std::move(inner)),
        remap_(name_remap(inner_->alphabet(), m_.domain())) {}

  Symbol next() override {
    if (buf_pos_ == buf_.size()) {
      const Word& im = m_.image(remap_[static_cast<std::size_t>(inner_->next())]);
      buf_ = im;
      buf_pos_ = 0;
    }
    return buf_[buf_pos_++];
  }

  const Alphabet& alphabet() const override { return m_.codomain(); }

 private:
  Morphism m_;
  WordPtr inner_;
  std::vector<Symbol> remap_;
  Word buf_;
  std::size_t buf_pos_ = 0;
};

class LiteralThen final : public InfiniteWord {
 public:
  LiteralThen(Word prefix, WordPtr inner) : prefix_(std::move(prefix)), inner_(std::move(inner)) {
    for (Symbol s : prefix_) {
      if (s < 0 || s >= inner_->alphabet().size()) {
        throw std::invalid_argument("prefix letter outside the stream alphabet");
      }
    }
  }

  Symbol next() override {
    if (pos_ < prefix_.size()) return prefix_[pos_++];
    return inner_->next();
  }

  const Alphabet& alphabet() const override { return inner_->alphabet(); }

 private:
  Word prefix_;
  std::size_t pos_ = 0;
  WordPtr inner_;
};

std::string word_to_names(const Word& w, const Alphabet& alpha) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alpha.name_of(w[i]);
  }
  return out;
}

class BlockRecodeStream final : public InfiniteWord {
 public:
  BlockRecodeStream(WordPtr inner, int k, BlockCoding coding)
      : inner_(std::move(inner)), k_(static_cast<std::size_t>(k)), coding_(std::move(coding)) {
    if (k < 1) throw std::invalid_argument("block size must be >= 1");
  }

  Symbol next() override {
    if (window_.empty()) {
      for (std::size_t i = 0; i < k_; ++i) window_.push_back(inner_->next());
    } else {
      window_.erase(window_.begin());
      window_.push_back(inner_->next());
    }
    auto it = coding_.code.find(window_);
    if (it == coding_.code.end()) {
      throw std::runtime_error("block coding does not cover factor \"" +
                               word_to_names(window_, inner_->alphabet()) + "\"");
    }
    return it->second;
  }

  const Alphabet& alphabet() const override { return coding_.block_alphabet; }

 private:
  WordPtr inner_;
  std::size_t k_;
  BlockCoding coding_;
  Word window_;
};

class CodeParseStream final : public InfiniteWord {
 public:
  CodeParseStream(WordPtr inner, std::vector<Word> code, Alphabet out, int lookahead)
      : inner_(std::move(inner)),
        code_(std::move(code)),
        out_(std::move(out)),
        lookahead_(lookahead) {
    if (code_.size() != static_cast<std::size_t>(out_.size())) {
      throw std::invalid_argument("parse_by_code needs one output letter per code word");
    }
    for (const Word& w : code_) {
      if (w.empty()) throw std::invalid_argument("parse_by_code: empty code word");
    }
  }

  Symbol next() override {
    const int chosen = choose();
    const std::size_t len = code_[static_cast<std::size_t>(chosen)].size();
    buf_.erase(buf_.begin(), buf_.begin() + static_cast<std::ptrdiff_t>(len));
    pos_ += len;
    return chosen;
  }

  const Alphabet& alphabet() const override { return out_; }

 private:
  void ensure(std::size_t n) {
    while (buf_.size() < n) buf_.push_back(inner_->next());
  }

  bool matches_at(const Word& w, std::size_t off) {
    ensure(off + w.size());
    return std::equal(w.begin(), w.end(), buf_.begin() + static_cast<std::ptrdiff_t>(off));
  }

  // True when some concatenation of code words matches `depth` more tokens.
  bool viable(std::size_t off, int depth) {
    if (depth == 0) return true;
    for (const Word& w : code_) {
      if (matches_at(w, off) && viable(off + w.size(), depth - 1)) return true;
    }
    return false;
  }

  int choose() {
    std::vector<int> candidates;
    for (std::size_t i = 0; i < code_.size(); ++i) {
      if (matches_at(code_[i], 0)) candidates.push_back(static_cast<int>(i));
    }
    if (candidates.empty()) {
      throw std::runtime_error("parse_by_code: no code word matches at letter " +
                               std::to_string(pos_ + 1));
    }
    if (candidates.size() == 1) return candidates[0];
    std::vector<int> survivors;
    for (int c : candidates) {
      if (viable(code_[static_cast<std::size_t>(c)].size(), lookahead_)) survivors.push_back(c);
    }
    if (survivors.size() == 1) return survivors[0];
    throw std::runtime_error(
        survivors.empty()
            ? "parse_by_code: dead end at letter " + std::to_string(pos_ + 1)
            : "parse_by_code: ambiguous parse at letter " + std::to_string(pos_ + 1));
  }

  WordPtr inner_;
  std::vector<Word> code_;
  Alphabet out_;
  int lookahead_;
  std::vector<Symbol> buf_;
  std::size_t pos_ = 0;
};

}  // namespace

WordPtr fixed_point(const Morphism& mu, Symbol seed) {
  return std::make_unique<FixedPointWord>(mu, seed);
}

WordPtr fixed_point(const Morphism& mu) { return fixed_point(mu, mu.default_seed()); }

WordPtr apply_morphism(const Morphism& m, WordPtr inner) {
  return std::make_unique<ApplyStream>(m, std::move(inner));
}

WordPtr decorate(const Morphism& base, Symbol seed, const Morphism& decoration) {
  return apply_morphism(decoration, fixed_point(base, seed));
}

WordPtr literal_then(Word prefix, WordPtr inner) {
  return std::make_unique<LiteralThen>(std::move(prefix), std::move(inner));
}

WordPtr block_recode(WordPtr inner, int k, const BlockCoding& coding) {
  return std::make_unique<BlockRecodeStream>(std::move(inner), k, coding);
}

WordPtr MorphicWord::generate() const { return decorate(base, seed, coding); }

MorphicWord decorated_to_morphic(const Morphism& base0, Symbol seed,
                                 const Morphism& decoration) {
  Morphism base = base0;
  if (!base.prolongable_on(seed)) {
    throw std::invalid_argument("decorated_to_morphic: base not prolongable on seed");
  }
  const auto dec_map = name_remap(base.domain(), decoration.domain());
  const auto chunk_count = [&](Symbol x) {
    return decoration.image(dec_map[static_cast<std::size_t>(x)]).size();
  };
  // Chunking needs the image of each letter to carry at least as many blocks
  // as the letter itself; squaring the base (same fixed point) grows images.
  for (int attempt = 0;; ++attempt) {
    bool ok = true;
    for (Symbol x = 0; x < base.domain().size() && ok; ++x) {
      std::size_t total = 0;
      for (Symbol y : base.image(x)) total += chunk_count(y);
      if (total < chunk_count(x)) ok = false;
    }
    if (ok) break;
    if (attempt == 4) {
      throw std::runtime_error("decorated_to_morphic: decoration cannot be chunked");
    }
    base = compose_morphisms(base, base);
  }

  Alphabet blocks;
  std::vector<std::vector<Symbol>> blocks_of(static_cast<std::size_t>(base.domain().size()));
  for (Symbol x = 0; x < base.domain().size(); ++x) {
    for (std::size_t i = 0; i < chunk_count(x); ++i) {
      blocks_of[static_cast<std::size_t>(x)].push_back(
          blocks.add(base.domain().name_of(x) + "." + std::to_string(i)));
    }
  }

  std::vector<Word> theta_images;
  std::vector<Word> coding_images;
  for (Symbol x = 0; x < base.domain().size(); ++x) {
    Word target;
    for (Symbol y : base.image(x)) {
      const auto& bs = blocks_of[static_cast<std::size_t>(y)];
      target.insert(target.end(), bs.begin(), bs.end());
    }
    const std::size_t m = chunk_count(x);
    const std::size_t q = target.size() / m;
    const std::size_t r = target.size() % m;
    std::size_t at = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t len = q + (i < r ? 1 : 0);
      theta_images.emplace_back(target.begin() + static_cast<std::ptrdiff_t>(at),
                                target.begin() + static_cast<std::ptrdiff_t>(at + len));
      at += len;
      coding_images.push_back(
          {decoration.image(dec_map[static_cast<std::size_t>(x)])[i]});
    }
  }

  Morphism theta(blocks, blocks, std::move(theta_images));
  Morphism coding(blocks, decoration.codomain(), std::move(coding_images));
  const Symbol new_seed = blocks_of[static_cast<std::size_t>(seed)][0];
  if (!theta.prolongable_on(new_seed)) {
    throw std::logic_error("decorated_to_morphic: produced base is not prolongable");
  }
  return MorphicWord{std::move(theta), new_seed, std::move(coding)};
}

Morphism k_block_morphism(const Morphism& mu, Symbol seed, int k,
                          const BlockCoding& coding) {
  if (k < 2) throw std::invalid_argument("block morphisms need block length k >= 2");
  if (!mu.prolongable_on(seed)) {
    throw std::invalid_argument("k_block_morphism needs a prolongable seed letter");
  }
  std::map<Symbol, const Word*> word_of;
  for (const auto& [w, s] : coding.code) {
    if (static_cast<int>(w.size()) != k) {
      throw std::invalid_argument("block coding word has length != k");
    }
    if (!word_of.emplace(s, &w).second) {
      throw std::invalid_argument("block coding must be injective");
    }
  }
  const Word initial = fixed_point(mu, seed)->take(static_cast<std::size_t>(k));
  if (coding.code.find(initial) == coding.code.end()) {
    throw std::invalid_argument("block coding does not cover the initial factor \"" +
                                word_to_names(initial, mu.domain()) + "\"");
  }
  std::vector<Word> images;
  for (Symbol s = 0; s < coding.block_alphabet.size(); ++s) {
    auto it = word_of.find(s);
    if (it == word_of.end()) {
      throw std::invalid_argument("block coding has no word for letter \"" +
                                  coding.block_alphabet.name_of(s) + "\"");
    }
    const Word& w = *it->second;
    const Word expanded = mu.apply(w);
    const std::size_t windows = mu.image(w[0]).size();
    Word out;
    for (std::size_t j = 0; j < windows; ++j) {
      Word window(expanded.begin() + static_cast<std::ptrdiff_t>(j),
                  expanded.begin() + static_cast<std::ptrdiff_t>(j) + k);
      auto c = coding.code.find(window);
      if (c == coding.code.end()) {
        throw std::invalid_argument("block coding does not cover factor \"" +
                                    word_to_names(window, mu.domain()) + "\"");
      }
      out.push_back(c->second);
    }
    images.push_back(std::move(out));
  }
  return Morphism(coding.block_alphabet, coding.block_alphabet, std::move(images));
}

PrefixComparison word_equal_prefix(InfiniteWord& w1, InfiniteWord& w2, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const Symbol s1 = w1.next();
    const Symbol s2 = w2.next();
    if (w1.alphabet().name_of(s1) != w2.alphabet().name_of(s2)) {
      return {false, i + 1};
    }
  }
  return {true, 0};
}

WordPtr parse_by_code(WordPtr inner, const std::vector<Word>& code, const Alphabet& out,
                      int lookahead) {
  return std::make_unique<CodeParseStream>(std::move(inner), code, out, lookahead);
}

}  // namespace beatty
