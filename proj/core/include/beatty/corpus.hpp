#pragma once

#include <string>
#include <vector>

#include "beatty/morphism.hpp"

namespace beatty {

// Named morphisms used across the library and CLI. Entries "sigma", "tau"
// and "delta" are families indexed by t (t >= 2); every other name ignores t.
// Unknown names throw std::invalid_argument listing the valid ones.
Morphism corpus_morphism(const std::string& name, int t = 2);
std::vector<std::string> corpus_names();

}  // namespace beatty
