#include "beatty/corpus.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>

#include "beatty/fibonacci.hpp"
#include "beatty/metallic.hpp"

namespace beatty {

namespace {

// Lookup ignores case and '-'/'_' separators, so "gammaE", "gamma-e" and
// "gamma_e" all resolve to the same entry.
std::string normalized(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '-' || c == '_') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

const std::map<std::string, std::function<Morphism(int)>>& registry() {
  static const std::map<std::string, std::function<Morphism(int)>> table = {
      {"f", [](int) { return fib_f(); }},
      {"fbar", [](int) { return fib_fbar(); }},
      {"g", [](int) { return fib_g(); }},
      {"h", [](int) { return fib_h(); }},
      {"g2hat", [](int) { return fib_g2hat(); }},
      {"sigma", [](int t) { return sigma_t(t); }},
      {"tau", [](int t) { return tau_delta(t).tau; }},
      {"delta", [](int t) { return tau_delta(t).delta; }},
      {"length", [](int t) { return length_word_morphism(t); }},
      {"bronze-theta", [](int) { return bronze_morphic_word().base; }},
      {"bronze-lambda", [](int) { return bronze_morphic_word().coding; }},
      {"gamma", [](int) { return sqrt2_system().gamma; }},
      {"gamma-e", [](int) { return sqrt2_system().gamma_e; }},
      {"pi", [](int) { return sqrt2_system().pi; }},
      {"sqrt2-sigma", [](int) { return sqrt2_system().sigma; }},
      {"sqrt2-delta", [](int) { return sqrt2_system().delta; }},
      {"sqrt2-theta", [](int) { return sqrt2_morphic_word().base; }},
      {"sqrt2-lambda", [](int) { return sqrt2_morphic_word().coding; }},
  };
  return table;
}

}  // namespace

Morphism corpus_morphism(const std::string& name, int t) {
  const auto& table = registry();
  auto it = table.find(name);
  if (it == table.end()) {
    const std::string wanted = normalized(name);
    for (it = table.begin(); it != table.end(); ++it) {
      if (normalized(it->first) == wanted) break;
    }
  }
  if (it == table.end()) {
    std::string valid;
    for (const auto& [key, unused] : table) {
      if (!valid.empty()) valid += ", ";
      valid += key;
    }
    throw std::invalid_argument("unknown morphism \"" + name + "\" (valid: " + valid + ")");
  }
  return it->second(t);
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& [key, unused] : registry()) out.push_back(key);
  return out;
}

}  // namespace beatty
