#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "beatty/corpus.hpp"
#include "beatty/fibonacci.hpp"
#include "beatty/metallic.hpp"
#include "beatty/morphism.hpp"
#include "beatty/quadratic.hpp"
#include "beatty/sequences.hpp"

namespace {

using beatty::Int;
using beatty::QuadraticIrrational;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Slope syntax: "phi", "sqrt2", "metallic:T", or a raw "a,b,d,c" quadruple
// meaning (a + b*sqrt(d)) / c.
QuadraticIrrational parse_slope(const std::string& text) {
  if (text == "phi") return QuadraticIrrational::golden_ratio();
  if (text == "sqrt2") return QuadraticIrrational::sqrt_of(2);
  if (text.rfind("metallic:", 0) == 0) {
    const std::string arg = text.substr(9);
    std::size_t used = 0;
    const int t = std::stoi(arg, &used);
    if (used != arg.size()) throw UsageError("bad metallic index \"" + arg + "\"");
    return beatty::metallic_mean(t).alpha;
  }
  std::vector<Int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad slope component \"" + item + "\"");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) {
      ++used;
    }
    if (used != item.size()) throw UsageError("bad slope component \"" + item + "\"");
    parts.emplace_back(v);
  }
  if (parts.size() != 4) {
    throw UsageError("slope must be phi, sqrt2, metallic:T or \"a,b,d,c\"");
  }
  return QuadraticIrrational::create(parts[0], parts[1], parts[2], parts[3]);
}

void print_terms(const std::string& format, const std::vector<Int>& values) {
  if (format == "csv") std::cout << "n,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (format == "plain") {
      std::cout << values[i] << "\n";
    } else if (format == "csv") {
      std::cout << (i + 1) << "," << values[i] << "\n";
    } else {
      std::cout << "{\"n\":" << (i + 1) << ",\"value\":" << values[i] << "}\n";
    }
  }
}

std::vector<Int> complement_prefix(const Int& a, const Int& b, std::size_t count) {
  if (beatty::is_degenerate(a, b)) {
    throw UsageError("complement of (" + a.str() + "," + b.str() + ") is finite");
  }
  Int bound = 64 + Int(count + 2) * (a + b);
  while (true) {
    auto comp = beatty::complement_sieve(a, b, bound);
    if (comp.size() >= count) {
      comp.resize(count);
      return comp;
    }
    bound *= 2;
  }
}

std::string polynomial_text(const beatty::MinimalPolynomial& p) {
  std::string s = "x^2";
  const auto term = [&s](const Int& c, const std::string& var) {
    if (c == 0) return;
    s += c < 0 ? " - " : " + ";
    const Int mag = c < 0 ? Int(-c) : c;
    if (mag != 1 || var.empty()) s += mag.str();
    s += var;
  };
  term(p.a1, "x");
  term(p.a0, "");
  if (p.a0 == 0 && p.a1 == 0) s += " + 0";
  return s;
}

struct SeqArgs {
  std::string kind;
  std::string slope = "phi";
  std::string format = "plain";
  std::int64_t n = 10000;
  std::int64_t p = 1, q = 0, r = 0;
  std::int64_t a = 1, b = 1;
};

int run_seq(const SeqArgs& args) {
  if (args.n < 0) throw UsageError("--n must be nonnegative");
  const std::size_t count = static_cast<std::size_t>(args.n);
  std::vector<Int> values;
  if (args.kind == "complement") {
    values = complement_prefix(args.a, args.b, count);
  } else {
    const auto alpha = parse_slope(args.slope);
    beatty::Sequence seq = [&]() {
      if (args.kind == "beatty") return beatty::beatty(alpha);
      if (args.kind == "gbs") return beatty::gbs(alpha, args.p, args.q, args.r);
      const auto a = beatty::beatty(alpha);
      const auto aa = beatty::compose(a, a);
      if (args.kind == "aa") return aa;
      return beatty::delta(aa);  // delta-aa
    }();
    values = seq.prefix(count);
  }
  print_terms(args.format, values);
  return 0;
}

struct ClassifyArgs {
  std::string slope;
  std::int64_t horizon = 10000;
};

int run_classify(const ClassifyArgs& args) {
  const auto alpha = parse_slope(args.slope);
  const auto poly = alpha.minimal_polynomial();
  std::cout << "slope " << alpha.to_string() << "\n";
  std::cout << "minimal polynomial " << polynomial_text(poly) << "\n";
  std::cout << "conjugate " << alpha.conjugate().to_string() << "\n";
  const auto c = beatty::classify_aa(alpha);
  if (c.is_gbs) {
    std::cout << "verdict GBS: AA(n) = " << c.p << "*A(n) + " << c.q << "*n "
              << (c.r < 0 ? "- " : "+ ") << Int(abs(c.r)) << "\n";
  } else {
    const auto a = beatty::beatty(alpha);
    const auto fit = beatty::fit_gbs(beatty::compose(a, a), alpha, Int(args.horizon));
    if (fit.is_gbs) throw std::logic_error("fit disagrees with classification");
    std::cout << "verdict NotGBS (refuted up to " << fit.checked_horizon << ")\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string suite;
  std::int64_t t_max = 0;  // 0 = per-suite default
  std::int64_t horizon = 10000;
  bool horizon_set = false;
  std::int64_t a = 0, b = 0;  // 0 = unset
};

class CheckReport {
 public:
  void check(bool ok, const std::string& label) {
    std::cout << (ok ? "pass  " : "FAIL  ") << label << "\n";
    if (!ok) failures_ += 1;
  }
  int exit_code() const { return failures_ == 0 ? 0 : 1; }

 private:
  int failures_ = 0;
};

void verify_identities(CheckReport& report, const Int& horizon) {
  const auto phi = QuadraticIrrational::golden_ratio();
  const auto a_phi = beatty::beatty(phi);
  const auto b_phi = beatty::beatty(beatty::complementary_slope(phi));
  bool golden = true;
  for (Int n = 1; n <= horizon && golden; ++n) {
    const Int an = a_phi(n), bn = b_phi(n);
    golden = a_phi(an) == an + n - 1 && a_phi(bn) == 2 * an + n &&
             b_phi(an) == 2 * an + n - 1 && b_phi(bn) == 3 * an + 2 * n;
  }
  report.check(golden, "golden slope: AA = A+n-1, AB = 2A+n, BA = 2A+n-1, BB = 3A+2n");

  const auto r2 = QuadraticIrrational::sqrt_of(2);
  const auto a_r2 = beatty::beatty(r2);
  const auto b_r2 = beatty::beatty(beatty::complementary_slope(r2));
  bool sqrt2_ok = true;
  for (Int n = 1; n <= horizon && sqrt2_ok; ++n) {
    const Int an = a_r2(n), bn = b_r2(n), aan = a_r2(an);
    sqrt2_ok = a_r2(bn) == 2 * an + 2 * n && bn == an + 2 * n &&
               b_r2(an) == aan + 2 * an && a_r2(bn) - b_r2(an) == 2 * n - aan;
  }
  report.check(sqrt2_ok, "sqrt2 slope: AB = 2A+2n, B = A+2n, BA = AA+2A, AB-BA = 2n-AA");
  report.check(beatty::commutator_identity_check(horizon),
               "sqrt2 slope: commutator identity helper");

  report.check(beatty::fib_g() ==
                   beatty::compose_morphisms(beatty::fib_fbar(), beatty::fib_f()),
               "g equals reversal(f) . f imagewise");
  report.check(beatty::fib_h() ==
                   beatty::compose_morphisms(beatty::fib_f(), beatty::fib_fbar()),
               "h equals f . reversal(f) imagewise");

  const std::size_t steps = static_cast<std::size_t>(static_cast<std::uint64_t>(horizon));
  const auto f = beatty::fib_f();
  const auto g = beatty::fib_g();
  const auto h = beatty::fib_h();
  const beatty::Symbol a_letter = f.domain().index_of("a");
  const beatty::Symbol b_letter = f.domain().index_of("b");
  {
    auto lhs = beatty::fixed_point(g, b_letter);
    auto rhs = beatty::literal_then({b_letter}, beatty::fixed_point(f, a_letter));
    report.check(word_equal_prefix(*lhs, *rhs, steps).equal,
                 "fixed point of g is b then the Fibonacci word");
  }
  {
    auto lhs = beatty::fixed_point(h, a_letter);
    auto rhs = beatty::literal_then({a_letter}, beatty::fixed_point(f, a_letter));
    report.check(word_equal_prefix(*lhs, *rhs, steps).equal,
                 "fixed point of h is a then the Fibonacci word");
  }
  {
    auto lhs = beatty::apply_morphism(beatty::fib_fbar(), beatty::fixed_point(h, a_letter));
    auto rhs = beatty::fixed_point(g, b_letter);
    report.check(word_equal_prefix(*lhs, *rhs, steps).equal,
                 "reversal(f) maps the fixed point of h onto the fixed point of g");
  }
  {
    auto lhs = beatty::apply_morphism(f, beatty::fixed_point(g, b_letter));
    auto rhs = beatty::fixed_point(h, a_letter);
    report.check(word_equal_prefix(*lhs, *rhs, steps).equal,
                 "f maps the fixed point of g onto the fixed point of h");
  }
}

void verify_fibonacci_sweep(CheckReport& report, const Int& horizon) {
  for (int a = 1; a <= 12; ++a) {
    for (int b = 1; b <= 12; ++b) {
      const std::string label =
          "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (beatty::is_degenerate(a, b)) {
        std::cout << "skip  " << label << " (finite complement)\n";
        continue;
      }
      report.check(beatty::verify_complement(a, b, horizon),
                   label + " complement description matches the sieve");
    }
  }
}

int run_verify(const VerifyArgs& args) {
  CheckReport report;
  const Int horizon = args.horizon;
  std::cout << "horizon " << horizon << "\n";

  const bool all = args.suite == "all";
  if (all || args.suite == "codewords") {
    const int t_max = args.t_max > 0 ? static_cast<int>(args.t_max) : 50;
    bool ok = true;
    std::string first_failure;
    for (int t = 2; t <= t_max && ok; ++t) {
      const auto chk = beatty::verify_code_words(t);
      if (!chk.ok) {
        ok = false;
        first_failure = " (t=" + std::to_string(t) + " " + chk.failed_identity + ")";
      }
    }
    report.check(ok, "sigma code word images for t = 2.." + std::to_string(t_max) +
                         first_failure);
  }
  if (all || args.suite == "metallic") {
    const int t_max = args.t_max > 0 ? static_cast<int>(args.t_max) : 10;
    for (int t = 2; t <= t_max; ++t) {
      report.check(beatty::verify_metallic_decoration(t, horizon),
                   "decorated tau fixed point matches the iterated Beatty differences, t=" +
                       std::to_string(t));
      report.check(beatty::verify_length_word(t, horizon),
                   "code word length word matches the complementary Beatty differences, t=" +
                       std::to_string(t));
    }
  }
  if (all || args.suite == "sqrt2") {
    report.check(beatty::sqrt2_word_matches_delta_aa(horizon),
                 "sqrt2 decoration equals the iterated Beatty differences");
    report.check(beatty::sqrt2_partition_consistent(horizon),
                 "sqrt2 partition parse reproduces the induced fixed point");
    report.check(beatty::sqrt2_morphic_word_matches(horizon),
                 "sqrt2 morphic word equals the decorated fixed point");
    report.check(beatty::sqrt2_letters_alternate(horizon),
                 "sqrt2 lifted fixed point alternates its 1 and 2 letters");
    report.check(beatty::sqrt2_two_positions_beatty(horizon < 1000 ? horizon : Int(1000)),
                 "sqrt2 lifted fixed point has its 2s at floor(n*(2+sqrt2))");
  }
  if (all || args.suite == "fibonacci") {
    if (args.a > 0 || args.b > 0) {
      if (args.a <= 0 || args.b <= 0) throw UsageError("need both --a and --b");
      report.check(beatty::verify_complement(args.a, args.b, horizon),
                   "(" + std::to_string(args.a) + "," + std::to_string(args.b) +
                       ") complement description matches the sieve");
    } else {
      const Int sweep_horizon = args.horizon_set ? horizon : Int(1000);
      if (sweep_horizon != horizon) std::cout << "sweep horizon " << sweep_horizon << "\n";
      verify_fibonacci_sweep(report, sweep_horizon);
    }
  }
  if (all || args.suite == "identities") {
    verify_identities(report, horizon);
  }
  return report.exit_code();
}

struct MorphismArgs {
  std::string name;
  std::string file;
  std::int64_t t = 2;
  std::int64_t fixed_point = 0;
  std::string seed;
};

int run_morphism(const MorphismArgs& args) {
  if (args.name.empty() == args.file.empty()) {
    throw UsageError("give exactly one of NAME or --file");
  }
  beatty::Morphism mu = [&]() {
    if (!args.name.empty()) {
      return beatty::corpus_morphism(args.name, static_cast<int>(args.t));
    }
    std::ifstream in(args.file);
    if (!in) throw UsageError("cannot open \"" + args.file + "\"");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return beatty::Morphism::parse(buffer.str());
  }();
  if (args.fixed_point > 0) {
    const beatty::Symbol seed =
        args.seed.empty() ? mu.default_seed() : mu.domain().index_of(args.seed);
    auto stream = beatty::fixed_point(mu, seed);
    const auto& letters = stream->alphabet();
    for (std::int64_t i = 0; i < args.fixed_point; ++i) {
      if (i > 0) std::cout << " ";
      std::cout << letters.name_of(stream->next());
    }
    std::cout << "\n";
  } else {
    std::cout << mu.to_text();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated Beatty sequences, generalized Beatty sequences and "
               "morphic word descriptions, with exact arithmetic"};
  app.require_subcommand(1);

  SeqArgs seq_args;
  auto* seq = app.add_subcommand("seq", "Print sequence terms");
  seq->add_option("kind", seq_args.kind, "beatty | gbs | aa | delta-aa | complement")
      ->required()
      ->check(CLI::IsMember({"beatty", "gbs", "aa", "delta-aa", "complement"}));
  seq->add_option("--slope", seq_args.slope, "phi | sqrt2 | metallic:T | a,b,d,c");
  seq->add_option("--n", seq_args.n, "number of terms (default 10000)");
  seq->add_option("--p", seq_args.p, "gbs: coefficient of floor(n*slope)");
  seq->add_option("--q", seq_args.q, "gbs: coefficient of n");
  seq->add_option("--r", seq_args.r, "gbs: constant term");
  seq->add_option("--a", seq_args.a, "complement: value of letter a");
  seq->add_option("--b", seq_args.b, "complement: value of letter b");
  seq->add_option("--format", seq_args.format, "plain | csv | jsonl")
      ->check(CLI::IsMember({"plain", "csv", "jsonl"}));

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand(
      "classify", "Decide whether the iterated Beatty sequence is a generalized one");
  classify->add_option("--slope", classify_args.slope, "phi | sqrt2 | metallic:T | a,b,d,c")
      ->required();
  classify->add_option("--horizon", classify_args.horizon,
                       "refutation horizon (default 10000)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", verify_args.suite,
                     "codewords | metallic | sqrt2 | fibonacci | identities | all")
      ->required()
      ->check(CLI::IsMember(
          {"codewords", "metallic", "sqrt2", "fibonacci", "identities", "all"}));
  verify->add_option("--t-max", verify_args.t_max, "largest metallic index");
  auto* horizon_opt =
      verify->add_option("--horizon", verify_args.horizon, "check horizon (default 10000)");
  verify->add_option("--a", verify_args.a, "fibonacci: value of letter a");
  verify->add_option("--b", verify_args.b, "fibonacci: value of letter b");

  MorphismArgs morphism_args;
  auto* morphism = app.add_subcommand("morphism", "Print or iterate a morphism");
  morphism->add_option("name", morphism_args.name, "corpus name (see --help-names)");
  morphism->add_option("--file", morphism_args.file, "read rules from a text file");
  morphism->add_option("--t", morphism_args.t, "metallic index for sigma/tau/delta/length");
  morphism->add_option("--fixed-point", morphism_args.fixed_point,
                       "print this many letters of the fixed point");
  morphism->add_option("--seed", morphism_args.seed, "fixed point seed letter");
  bool list_names = false;
  morphism->add_flag("--help-names", list_names, "list corpus names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  verify_args.horizon_set = horizon_opt->count() > 0;

  try {
    if (seq->parsed()) return run_seq(seq_args);
    if (classify->parsed()) return run_classify(classify_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (morphism->parsed()) {
      if (list_names) {
        for (const auto& name : beatty::corpus_names()) std::cout << name << "\n";
        return 0;
      }
      return run_morphism(morphism_args);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
