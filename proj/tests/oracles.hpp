#pragma once

// Independent reference implementations used only by tests. They deliberately
// avoid the library's own integer-square-root floor path: floors come from
// 120-digit decimal arithmetic with an explicit distance-to-integer guard,
// and factor data comes from literal substring enumeration.

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "beatty/fibonacci.hpp"
#include "beatty/morphism.hpp"
#include "beatty/quadratic.hpp"

namespace testing_oracles {

using Dec = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<120>>;

// floor(n * (a + b sqrt(d)) / c) in plain decimal arithmetic. Throws when the
// value sits within 1e-60 of an integer, which would make the floor untrusted;
// canonical quadratic irrationals never hit integers, so a trip means the
// oracle itself ran out of precision.
inline beatty::Int decimal_floor_multiple(const beatty::QuadraticIrrational& alpha,
                                          const beatty::Int& n) {
  const Dec value = (Dec(alpha.a().str()) + Dec(alpha.b().str()) * sqrt(Dec(alpha.d().str()))) *
                    Dec(n.str()) / Dec(alpha.c().str());
  const Dec down = floor(value);
  const Dec guard("1e-60");
  if (value - down < guard || (down + 1) - value < guard) {
    throw std::logic_error("decimal oracle too close to an integer");
  }
  return down.convert_to<beatty::Int>();
}

// All values a*zeros + b*ones over literal substrings of the infinite word
// fixed by a -> ab, b -> a, up to `bound`, enumerated from a prefix long
// enough (8x the longest useful factor) that every factor class appears.
inline std::vector<beatty::Int> brute_factor_values(const beatty::Int& a,
                                                    const beatty::Int& b, int bound) {
  const int max_len = bound;  // value >= length, so longer factors cannot fit
  const std::size_t prefix_len = static_cast<std::size_t>(8 * max_len + 8);
  auto stream = beatty::fixed_point(beatty::fib_f());
  const auto& letters = stream->alphabet();
  const beatty::Symbol one = letters.index_of("b");
  std::vector<int> ones_prefix(prefix_len + 1, 0);
  for (std::size_t i = 0; i < prefix_len; ++i) {
    ones_prefix[i + 1] = ones_prefix[i] + (stream->next() == one ? 1 : 0);
  }
  std::set<std::pair<int, int>> shapes;  // (zeros, ones)
  for (std::size_t start = 0; start < prefix_len; ++start) {
    const std::size_t longest =
        std::min<std::size_t>(static_cast<std::size_t>(max_len), prefix_len - start);
    for (std::size_t len = 1; len <= longest; ++len) {
      const int ones = ones_prefix[start + len] - ones_prefix[start];
      shapes.emplace(static_cast<int>(len) - ones, ones);
    }
  }
  std::set<beatty::Int> values;
  for (const auto& [zeros, ones] : shapes) {
    const beatty::Int v = a * zeros + b * ones;
    if (v >= 1 && v <= bound) values.insert(v);
  }
  return {values.begin(), values.end()};
}

}  // namespace testing_oracles
