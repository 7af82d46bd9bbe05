#pragma once

#include <random>

#include "skelbetti/simplicial_complex.hpp"

namespace skelbetti {

// Seeded random complex on {1,...,n}: one to six facets of random
// cardinality, redrawn until the dimension reaches min_dim.  Avoids
// distribution adapters so a seed pins the exact sequence of complexes.
SimplicialComplex random_complex(std::mt19937_64& rng, int n, int min_dim = 1);

}  // namespace skelbetti
