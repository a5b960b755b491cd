#include "beatty/metallic.hpp"

#include <stdexcept>
#include <utility>

namespace beatty {

namespace {

std::string letter(int k) { return std::to_string(k); }

Word concat(std::initializer_list<const Word*> parts) {
  Word out;
  for (const Word* part : parts) out.insert(out.end(), part->begin(), part->end());
  return out;
}

}  // namespace

MetallicMean metallic_mean(int t) {
  if (t < 2) throw std::invalid_argument("metallic_mean: t must be >= 2");
  return MetallicMean{t, QuadraticIrrational::create(2 - t, 1, Int(t) * t + 4, 2)};
}

Morphism sigma_t(int t) {
  if (t < 2) throw std::invalid_argument("sigma_t: t must be >= 2");
  std::vector<std::string> ones(static_cast<std::size_t>(t - 1), "1");
  std::vector<std::string> im1 = ones;
  im1.push_back("2");
  std::vector<std::string> im2 = im1;
  im2.push_back("1");
  return Morphism::from_rules({{"1", im1}, {"2", im2}});
}

CodeWords code_words(int t) {
  if (t < 2) throw std::invalid_argument("code_words: t must be >= 2");
  CodeWords lw;
  lw.letters = Alphabet({"1", "2"});
  const Symbol one = 0, two = 1;
  for (int j = 1; j <= t - 1; ++j) {
    Word u;
    u.insert(u.end(), static_cast<std::size_t>(t - j), one);
    u.push_back(two);
    u.insert(u.end(), static_cast<std::size_t>(j), one);
    lw.u.push_back(std::move(u));
  }
  lw.v.push_back(two);
  lw.v.insert(lw.v.end(), static_cast<std::size_t>(t), one);
  lw.v.push_back(two);
  lw.w.push_back(one);
  lw.w.push_back(two);
  lw.w.insert(lw.w.end(), static_cast<std::size_t>(t - 1), one);
  lw.w.push_back(two);
  return lw;
}

CodeWordCheck verify_code_words_with(const Morphism& sigma, int t) {
  const CodeWords lw = code_words(t);
  const auto remap = name_remap(lw.letters, sigma.domain());
  const auto conv = [&remap](const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(remap[static_cast<std::size_t>(s)]);
    return out;
  };
  std::vector<Word> u;
  for (const Word& uj : lw.u) u.push_back(conv(uj));
  const Word v = conv(lw.v);
  const Word w = conv(lw.w);

  std::vector<std::pair<std::string, std::pair<Word, Word>>> identities;
  const auto add = [&](const std::string& name, const Word& arg, Word expected) {
    identities.emplace_back(name, std::make_pair(sigma.apply(arg), std::move(expected)));
  };

  if (t == 2) {
    add("sigma(u_1)", u[0], concat({&u[0], &v}));
    add("sigma(v)", v, concat({&u[0], &w, &u[0]}));
    add("sigma(w)", w, concat({&u[0], &v, &u[0]}));
  } else if (t == 3) {
    add("sigma(u_1)", u[0], concat({&u[0], &u[1], &v}));
    add("sigma(u_2)", u[1], concat({&u[0], &u[1], &w}));
    add("sigma(v)", v, concat({&u[0], &u[0], &w, &u[0]}));
    add("sigma(w)", w, concat({&u[0], &u[1], &w, &u[0]}));
  } else {
    {
      Word rhs;
      for (int j = 1; j <= t - 1; ++j) rhs = concat({&rhs, &u[j - 1]});
      add("sigma(u_1)", u[0], concat({&rhs, &v}));
      add("sigma(u_2)", u[1], concat({&rhs, &w}));
    }
    for (int j = 3; j <= t - 1; ++j) {
      Word rhs;
      for (int i = 1; i <= t - j; ++i) rhs = concat({&rhs, &u[i - 1]});
      rhs = concat({&rhs, &u[t - j], &u[t - j]});
      for (int i = t - j + 2; i <= t - 2; ++i) rhs = concat({&rhs, &u[i - 1]});
      add("sigma(u_" + std::to_string(j) + ")", u[j - 1], concat({&rhs, &w}));
    }
    {
      Word rhs = concat({&u[0], &u[0]});
      for (int i = 2; i <= t - 2; ++i) rhs = concat({&rhs, &u[i - 1]});
      add("sigma(v)", v, concat({&rhs, &w, &u[0]}));
    }
    {
      Word rhs = concat({&u[0], &u[1], &u[1]});
      for (int i = 3; i <= t - 2; ++i) rhs = concat({&rhs, &u[i - 1]});
      add("sigma(w)", w, concat({&rhs, &w, &u[0]}));
    }
  }

  for (const auto& [name, sides] : identities) {
    if (sides.first != sides.second) return {false, name};
  }
  return {true, ""};
}

CodeWordCheck verify_code_words(int t) { return verify_code_words_with(sigma_t(t), t); }

TauDelta tau_delta(int t) {
  if (t < 2) throw std::invalid_argument("tau_delta: t must be >= 2");
  using Rules = std::vector<std::pair<std::string, std::vector<std::string>>>;
  Rules tau_rules, delta_rules;
  const auto rep = [](int count, const std::string& name) {
    return std::vector<std::string>(static_cast<std::size_t>(count), name);
  };
  const auto append = [](std::vector<std::string>& to, const std::vector<std::string>& part) {
    to.insert(to.end(), part.begin(), part.end());
  };
  const auto range = [&](int from, int to) {
    std::vector<std::string> out;
    for (int i = from; i <= to; ++i) out.push_back(letter(i));
    return out;
  };

  if (t == 2) {
    tau_rules = {{"1", {"1", "2"}}, {"2", {"1", "3", "1"}}, {"3", {"1", "2", "1"}}};
    delta_rules = {{"1", {"1", "3"}}, {"2", {"2", "2", "2"}}, {"3", {"1", "3", "2"}}};
  } else if (t == 3) {
    tau_rules = {{"1", {"1", "2", "3"}},
                 {"2", {"1", "2", "4"}},
                 {"3", {"1", "1", "4", "1"}},
                 {"4", {"1", "2", "4", "1"}}};
    delta_rules = {{"1", {"1", "1", "3"}},
                   {"2", {"1", "2", "2"}},
                   {"3", {"2", "1", "2", "2"}},
                   {"4", {"1", "2", "2", "2"}}};
  } else {
    for (int j = 1; j <= t + 1; ++j) {
      std::vector<std::string> tau_im, delta_im;
      if (j == 1) {
        tau_im = range(1, t - 1);
        tau_im.push_back(letter(t));
        delta_im = rep(t - 1, "1");
        delta_im.push_back("3");
      } else if (j == 2) {
        tau_im = range(1, t - 1);
        tau_im.push_back(letter(t + 1));
        delta_im = rep(t - 2, "1");
        delta_im.push_back("2");
        delta_im.push_back("2");
      } else if (j <= t - 1) {
        tau_im = range(1, t - j);
        append(tau_im, rep(2, letter(t - j + 1)));
        append(tau_im, range(t - j + 2, t - 2));
        tau_im.push_back(letter(t + 1));
        delta_im = rep(t - j, "1");
        delta_im.push_back("2");
        append(delta_im, rep(j - 2, "1"));
        delta_im.push_back("2");
      } else if (j == t) {
        tau_im = {"1", "1"};
        append(tau_im, range(2, t - 2));
        tau_im.push_back(letter(t + 1));
        tau_im.push_back("1");
        delta_im = {"2"};
        append(delta_im, rep(t - 2, "1"));
        delta_im.push_back("2");
        delta_im.push_back("2");
      } else {
        tau_im = {"1", "2", "2"};
        append(tau_im, range(3, t - 2));
        tau_im.push_back(letter(t + 1));
        tau_im.push_back("1");
        delta_im = {"1", "2"};
        append(delta_im, rep(t - 3, "1"));
        delta_im.push_back("2");
        delta_im.push_back("2");
      }
      tau_rules.emplace_back(letter(j), tau_im);
      delta_rules.emplace_back(letter(j), delta_im);
    }
  }
  return TauDelta{Morphism::from_rules(tau_rules), Morphism::from_rules(delta_rules)};
}

bool verify_metallic_decoration(int t, const Int& horizon) {
  const MetallicMean mm = metallic_mean(t);
  const TauDelta td = tau_delta(t);
  auto stream = decorate(td.tau, td.tau.domain().index_of("1"), td.delta);
  const Alphabet& out = stream->alphabet();
  Int prev = mm.alpha.floor_multiple(mm.alpha.floor_multiple(1));
  for (Int n = 1; n <= horizon; ++n) {
    const Int cur = mm.alpha.floor_multiple(mm.alpha.floor_multiple(n + 1));
    if (cur - prev != out.value_of(stream->next())) return false;
    prev = cur;
  }
  return true;
}

Morphism length_word_morphism(int t) {
  if (t < 2) throw std::invalid_argument("length_word_morphism: t must be >= 2");
  const std::string lo = letter(t + 1), hi = letter(t + 2);
  std::vector<std::string> im1(static_cast<std::size_t>(t - 1), lo);
  im1.push_back(hi);
  std::vector<std::string> im2 = im1;
  im2.push_back(lo);
  return Morphism::from_rules({{lo, im1}, {hi, im2}});
}

namespace {

// Letter j codes a word of length t+1, letters t and t+1 code length t+2.
Morphism length_coding(const Morphism& tau, int t) {
  std::vector<std::pair<std::string, std::vector<std::string>>> rules;
  for (Symbol s = 0; s < tau.domain().size(); ++s) {
    const std::string& name = tau.domain().name_of(s);
    const bool uj = std::stoi(name) <= t - 1;
    rules.emplace_back(name,
                       std::vector<std::string>{letter(uj ? t + 1 : t + 2)});
  }
  return Morphism::from_rules(rules);
}

}  // namespace

bool verify_length_word(int t, const Int& horizon) {
  const TauDelta td = tau_delta(t);
  const Morphism lc = length_coding(td.tau, t);
  const Symbol seed = td.tau.domain().index_of("1");
  {
    auto coded = apply_morphism(lc, fixed_point(td.tau, seed));
    auto ref = fixed_point(length_word_morphism(t));
    if (!word_equal_prefix(*coded, *ref,
                           static_cast<std::size_t>(static_cast<std::uint64_t>(horizon)))
             .equal) {
      return false;
    }
  }
  const MetallicMean mm = metallic_mean(t);
  const auto beta = mm.alpha.plus(Rat(t));
  auto coded = apply_morphism(lc, fixed_point(td.tau, seed));
  const Alphabet& out = coded->alphabet();
  Int prev = beta.floor_multiple(1);
  for (Int n = 1; n <= horizon; ++n) {
    const Int cur = beta.floor_multiple(n + 1);
    if (cur - prev != out.value_of(coded->next())) return false;
    prev = cur;
  }
  return true;
}

MorphicWord bronze_morphic_word() {
  Morphism theta = Morphism::from_rules({{"1", {"1", "2", "3"}},
                                         {"2", {"1", "6", "4"}},
                                         {"3", {"5", "1", "4", "5"}},
                                         {"4", {"1", "6", "4", "5"}},
                                         {"5", {"1", "2", "3"}},
                                         {"6", {"1", "6", "4"}}});
  Morphism coding = Morphism::from_rules({{"1", {"1"}},
                                          {"2", {"1"}},
                                          {"3", {"3"}},
                                          {"4", {"2"}},
                                          {"5", {"2"}},
                                          {"6", {"2"}}});
  const Symbol seed = theta.domain().index_of("1");
  return MorphicWord{std::move(theta), seed, std::move(coding)};
}

Sqrt2System sqrt2_system() {
  Sqrt2System out{
      Morphism::from_rules({{"1", {"1", "2"}}, {"2", {"1", "2", "1"}}}),
      Morphism::from_rules({{"1", {"1", "3"}},
                            {"2", {"2", "4"}},
                            {"3", {"2", "4", "1"}},
                            {"4", {"1", "3", "2"}}}),
      Morphism::from_rules(
          {{"1", {"1"}}, {"2", {"1"}}, {"3", {"2"}}, {"4", {"2"}}}),
      {},
      Morphism::from_rules({{"1", {"1", "2", "3"}}, {"2", {"1"}}, {"3", {"1", "2", "1"}}}),
      Morphism::from_rules({{"1", {"1", "3"}}, {"2", {"2"}}, {"3", {"2", "2"}}})};
  const Alphabet& letters = out.gamma_e.domain();
  const auto word = [&letters](std::initializer_list<const char*> names) {
    Word w;
    for (const char* n : names) w.push_back(letters.index_of(n));
    return w;
  };
  out.partition_words = {word({"1", "3", "2"}), word({"4"}), word({"1", "2", "4"})};
  return out;
}

MorphicWord sqrt2_morphic_word() {
  Morphism theta = Morphism::from_rules({{"a", {"a", "d", "c"}},
                                         {"b", {"a", "d", "c"}},
                                         {"c", {"a", "d"}},
                                         {"d", {"b", "c"}}});
  Morphism coding = Morphism::from_rules(
      {{"a", {"1"}}, {"b", {"2"}}, {"c", {"2"}}, {"d", {"3"}}});
  const Symbol seed = theta.domain().index_of("a");
  return MorphicWord{std::move(theta), seed, std::move(coding)};
}

namespace {

Int delta_aa_sqrt2(const QuadraticIrrational& alpha, const Int& n) {
  const Int cur = alpha.floor_multiple(alpha.floor_multiple(n + 1));
  const Int prev = alpha.floor_multiple(alpha.floor_multiple(n));
  return cur - prev;
}

}  // namespace

bool sqrt2_word_matches_delta_aa(const Int& horizon) {
  const auto alpha = QuadraticIrrational::sqrt_of(2);
  const Sqrt2System ax = sqrt2_system();
  auto stream = decorate(ax.sigma, ax.sigma.domain().index_of("1"), ax.delta);
  const Alphabet& out = stream->alphabet();
  for (Int n = 1; n <= horizon; ++n) {
    if (delta_aa_sqrt2(alpha, n) != out.value_of(stream->next())) return false;
  }
  return true;
}

bool sqrt2_partition_consistent(const Int& horizon) {
  const Sqrt2System ax = sqrt2_system();
  auto tokens = parse_by_code(fixed_point(ax.gamma_e, ax.gamma_e.domain().index_of("1")),
                              ax.partition_words, Alphabet({"1", "2", "3"}));
  auto ref = fixed_point(ax.sigma, ax.sigma.domain().index_of("1"));
  return word_equal_prefix(*tokens, *ref,
                           static_cast<std::size_t>(static_cast<std::uint64_t>(horizon)))
      .equal;
}

bool sqrt2_morphic_word_matches(const Int& horizon) {
  const Sqrt2System ax = sqrt2_system();
  auto direct = decorate(ax.sigma, ax.sigma.domain().index_of("1"), ax.delta);
  auto coded = sqrt2_morphic_word().generate();
  return word_equal_prefix(*direct, *coded,
                           static_cast<std::size_t>(static_cast<std::uint64_t>(horizon)))
      .equal;
}

bool sqrt2_letters_alternate(const Int& horizon) {
  const Sqrt2System ax = sqrt2_system();
  auto y = fixed_point(ax.gamma_e, ax.gamma_e.domain().index_of("1"));
  const Alphabet& letters = y->alphabet();
  int last = 0;
  for (Int n = 1; n <= horizon; ++n) {
    const std::string& name = letters.name_of(y->next());
    if (name == "1") {
      if (last == 1) return false;
      last = 1;
    } else if (name == "2") {
      if (last == 2) return false;
      last = 2;
    }
  }
  return true;
}

bool sqrt2_two_positions_beatty(const Int& count) {
  const Sqrt2System ax = sqrt2_system();
  auto y = fixed_point(ax.gamma_e, ax.gamma_e.domain().index_of("1"));
  const Alphabet& letters = y->alphabet();
  const auto slope = QuadraticIrrational::create(2, 1, 2, 1);  // 2 + sqrt(2)
  Int found = 0;
  for (Int pos = 1; found < count; ++pos) {
    if (letters.name_of(y->next()) == "2") {
      ++found;
      if (pos != slope.floor_multiple(found)) return false;
    }
  }
  return true;
}

bool verify_sqrt2(const Int& horizon) {
  return sqrt2_word_matches_delta_aa(horizon) && sqrt2_partition_consistent(horizon) &&
         sqrt2_morphic_word_matches(horizon) && sqrt2_letters_alternate(horizon) &&
         sqrt2_two_positions_beatty(horizon < 1000 ? horizon : Int(1000));
}

}  // namespace beatty
