#pragma once

// Umbrella header pulling in the whole library.

#include "beatty/corpus.hpp"
#include "beatty/fibonacci.hpp"
#include "beatty/intmath.hpp"
#include "beatty/metallic.hpp"
#include "beatty/morphism.hpp"
#include "beatty/quadratic.hpp"
#include "beatty/sequences.hpp"
