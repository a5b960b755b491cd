#include <doctest.h>

#include <string>
#include <vector>

#include "beatty/metallic.hpp"
#include "beatty/sequences.hpp"

using namespace beatty;

namespace {

using SV = std::vector<std::string>;

SV image_names(const Morphism& m, const std::string& letter) {
  SV out;
  for (Symbol s : m.image_of(letter)) out.push_back(m.codomain().name_of(s));
  return out;
}

Word word_of(const Alphabet& letters, const std::string& digits) {
  Word w;
  for (char ch : digits) w.push_back(letters.index_of(std::string(1, ch)));
  return w;
}

// Code word of tau's letter j: u_j for j <= t-1, then v, then w.
Word code_of(const CodeWords& cw, int t, int j) {
  if (j <= t - 1) return cw.u[static_cast<std::size_t>(j) - 1];
  return j == t ? cw.v : cw.w;
}

}  // namespace

TEST_CASE("metallic_mean basics") {
  CHECK(metallic_mean(2).alpha == QuadraticIrrational::sqrt_of(2));
  for (int t = 2; t <= 12; ++t) {
    const auto m = metallic_mean(t);
    CHECK(m.t == t);
    CHECK(m.alpha.greater_than(Rat(1)));
    CHECK(m.alpha.less_than(Rat(2)));
    CHECK(m.alpha.minimal_polynomial() == MinimalPolynomial{t - 2, -t});
  }
  CHECK(metallic_mean(3).alpha == QuadraticIrrational::create(-1, 1, 13, 2));
  CHECK_THROWS_AS(metallic_mean(1), std::invalid_argument);
  CHECK_THROWS_AS(metallic_mean(0), std::invalid_argument);
}

TEST_CASE("sigma_t shapes") {
  const auto s2 = sigma_t(2);
  CHECK(s2.domain() == Alphabet({"1", "2"}));
  CHECK(image_names(s2, "1") == SV({"1", "2"}));
  CHECK(image_names(s2, "2") == SV({"1", "2", "1"}));

  const auto s5 = sigma_t(5);
  CHECK(image_names(s5, "1") == SV({"1", "1", "1", "1", "2"}));
  CHECK(image_names(s5, "2") == SV({"1", "1", "1", "1", "2", "1"}));
}

TEST_CASE("code word tables") {
  const auto c2 = code_words(2);
  CHECK(c2.letters == Alphabet({"1", "2"}));
  REQUIRE(c2.u.size() == 1);
  CHECK(c2.u[0] == word_of(c2.letters, "121"));
  CHECK(c2.v == word_of(c2.letters, "2112"));
  CHECK(c2.w == word_of(c2.letters, "1212"));

  const auto c4 = code_words(4);
  REQUIRE(c4.u.size() == 3);
  CHECK(c4.u[0] == word_of(c4.letters, "11121"));
  CHECK(c4.u[1] == word_of(c4.letters, "11211"));
  CHECK(c4.u[2] == word_of(c4.letters, "12111"));
  CHECK(c4.v == word_of(c4.letters, "211112"));
  CHECK(c4.w == word_of(c4.letters, "121112"));
}

TEST_CASE("code word identities hold and mutations fail") {
  for (int t = 2; t <= 12; ++t) {
    CAPTURE(t);
    const auto check = verify_code_words(t);
    CHECK(check.ok);
    CHECK(check.failed_identity.empty());
  }
  // Expanding t = 3 code words through the t = 2 substitution breaks the
  // very first identity.
  const auto bad = verify_code_words_with(sigma_t(2), 3);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.failed_identity.empty());
}

TEST_CASE("tau and delta tables") {
  const auto td2 = tau_delta(2);
  CHECK(image_names(td2.tau, "1") == SV({"1", "2"}));
  CHECK(image_names(td2.tau, "2") == SV({"1", "3", "1"}));
  CHECK(image_names(td2.tau, "3") == SV({"1", "2", "1"}));
  CHECK(image_names(td2.delta, "1") == SV({"1", "3"}));
  CHECK(image_names(td2.delta, "2") == SV({"2", "2", "2"}));
  CHECK(image_names(td2.delta, "3") == SV({"1", "3", "2"}));

  const auto td3 = tau_delta(3);
  CHECK(image_names(td3.tau, "1") == SV({"1", "2", "3"}));
  CHECK(image_names(td3.tau, "2") == SV({"1", "2", "4"}));
  CHECK(image_names(td3.tau, "3") == SV({"1", "1", "4", "1"}));
  CHECK(image_names(td3.tau, "4") == SV({"1", "2", "4", "1"}));
  CHECK(image_names(td3.delta, "1") == SV({"1", "1", "3"}));
  CHECK(image_names(td3.delta, "2") == SV({"1", "2", "2"}));
  CHECK(image_names(td3.delta, "3") == SV({"2", "1", "2", "2"}));
  CHECK(image_names(td3.delta, "4") == SV({"1", "2", "2", "2"}));

  const auto td4 = tau_delta(4);
  CHECK(image_names(td4.tau, "3") == SV({"1", "2", "2", "5"}));
  CHECK(image_names(td4.tau, "4") == SV({"1", "1", "2", "5", "1"}));
  CHECK(image_names(td4.tau, "5") == SV({"1", "2", "2", "5", "1"}));

  const auto td5 = tau_delta(5);
  CHECK(image_names(td5.tau, "5") == SV({"1", "1", "2", "3", "6", "1"}));
}

TEST_CASE("tau relabels the code word identities") {
  for (int t = 2; t <= 12; ++t) {
    CAPTURE(t);
    const auto cw = code_words(t);
    const auto sigma = sigma_t(t);
    const auto tau = tau_delta(t).tau;
    for (int j = 1; j <= t + 1; ++j) {
      CAPTURE(j);
      const Word expanded = sigma.apply(code_of(cw, t, j));
      Word relabeled;
      for (Symbol s : tau.image_of(std::to_string(j))) {
        const int letter = std::stoi(tau.codomain().name_of(s));
        const Word piece = code_of(cw, t, letter);
        relabeled.insert(relabeled.end(), piece.begin(), piece.end());
      }
      CHECK(expanded == relabeled);
    }
  }
}

TEST_CASE("decoration reproduces iterated first differences") {
  for (int t = 2; t <= 6; ++t) {
    CAPTURE(t);
    CHECK(verify_metallic_decoration(t, 2000));
  }
}

TEST_CASE("length word") {
  const auto lw = length_word_morphism(2);
  CHECK(lw.domain() == Alphabet({"3", "4"}));
  CHECK(image_names(lw, "3") == SV({"3", "4"}));
  CHECK(image_names(lw, "4") == SV({"3", "4", "3"}));

  const auto lw5 = length_word_morphism(5);
  CHECK(image_names(lw5, "6") == SV({"6", "6", "6", "6", "7"}));
  CHECK(image_names(lw5, "7") == SV({"6", "6", "6", "6", "7", "6"}));

  for (int t = 2; t <= 6; ++t) {
    CAPTURE(t);
    CHECK(verify_length_word(t, 2000));
  }
}

TEST_CASE("bronze morphic word") {
  const auto m = bronze_morphic_word();
  CHECK(m.coding.is_coding());
  auto w = m.generate();
  CHECK(w->take_values(11) ==
        std::vector<Int>({1, 1, 3, 1, 2, 2, 2, 1, 2, 2, 1}));

  const auto alpha = metallic_mean(3).alpha;
  const auto a = beatty::beatty(alpha);
  auto exact = delta_word(compose(a, a), Alphabet({"1", "2", "3"}));
  auto again = bronze_morphic_word().generate();
  CHECK(word_equal_prefix(*exact, *again, 2000).equal);
}

TEST_CASE("sqrt2 bundle tables") {
  const auto sys = sqrt2_system();
  CHECK(image_names(sys.gamma, "1") == SV({"1", "2"}));
  CHECK(image_names(sys.gamma, "2") == SV({"1", "2", "1"}));

  CHECK(sys.gamma_e.domain() == Alphabet({"1", "2", "3", "4"}));
  CHECK(image_names(sys.gamma_e, "1") == SV({"1", "3"}));
  CHECK(image_names(sys.gamma_e, "2") == SV({"2", "4"}));
  CHECK(image_names(sys.gamma_e, "3") == SV({"2", "4", "1"}));
  CHECK(image_names(sys.gamma_e, "4") == SV({"1", "3", "2"}));

  CHECK(sys.pi.is_coding());
  CHECK(image_names(sys.pi, "1") == SV({"1"}));
  CHECK(image_names(sys.pi, "2") == SV({"1"}));
  CHECK(image_names(sys.pi, "3") == SV({"2"}));
  CHECK(image_names(sys.pi, "4") == SV({"2"}));

  // The lift commutes with the projection.
  CHECK(compose_morphisms(sys.pi, sys.gamma_e) ==
        compose_morphisms(sys.gamma, sys.pi));

  const auto& letters = sys.gamma_e.domain();
  REQUIRE(sys.partition_words.size() == 3);
  CHECK(sys.partition_words[0] == word_of(letters, "132"));
  CHECK(sys.partition_words[1] == word_of(letters, "4"));
  CHECK(sys.partition_words[2] == word_of(letters, "124"));

  CHECK(image_names(sys.sigma, "1") == SV({"1", "2", "3"}));
  CHECK(image_names(sys.sigma, "2") == SV({"1"}));
  CHECK(image_names(sys.sigma, "3") == SV({"1", "2", "1"}));
  CHECK(image_names(sys.delta, "1") == SV({"1", "3"}));
  CHECK(image_names(sys.delta, "2") == SV({"2"}));
  CHECK(image_names(sys.delta, "3") == SV({"2", "2"}));
}

TEST_CASE("sqrt2 checks") {
  const auto m = sqrt2_morphic_word();
  CHECK(image_names(m.base, "a") == SV({"a", "d", "c"}));
  CHECK(image_names(m.base, "b") == SV({"a", "d", "c"}));
  CHECK(image_names(m.base, "c") == SV({"a", "d"}));
  CHECK(image_names(m.base, "d") == SV({"b", "c"}));
  CHECK(image_names(m.coding, "a") == SV({"1"}));
  CHECK(image_names(m.coding, "b") == SV({"2"}));
  CHECK(image_names(m.coding, "c") == SV({"2"}));
  CHECK(image_names(m.coding, "d") == SV({"3"}));
  CHECK(m.generate()->take_values(9) ==
        std::vector<Int>({1, 3, 2, 2, 2, 1, 3, 1, 3}));

  CHECK(sqrt2_word_matches_delta_aa(1500));
  CHECK(sqrt2_partition_consistent(1500));
  CHECK(sqrt2_morphic_word_matches(1500));
  CHECK(sqrt2_letters_alternate(1500));
  CHECK(sqrt2_two_positions_beatty(300));
  CHECK(verify_sqrt2(1200));
}
