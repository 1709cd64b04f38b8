#pragma once

#include <random>

#include "finsem/decide.hpp"

namespace finsem {

// Uniform-ish random formula within the fragment; leaves drawn from
// p1..p{num_letters}.
Formula random_formula(std::mt19937& rng, Fragment fragment, int max_depth,
                       int num_letters);

Sequent random_sequent(std::mt19937& rng, Fragment fragment, int max_depth,
                       int num_letters, int max_premises);

}  // namespace finsem
