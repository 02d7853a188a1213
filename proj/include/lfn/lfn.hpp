#pragma once

// Umbrella header: permutations, Lehmer codes and factorial-base ranking,
// the base-2 factorial norm with its metric, block decompositions of norm
// values, the value distribution, and the verification suites.

#include "decomposition.hpp"   // IWYU pragma: export
#include "distribution.hpp"    // IWYU pragma: export
#include "lehmer_code.hpp"     // IWYU pragma: export
#include "norm.hpp"            // IWYU pragma: export
#include "permutation.hpp"     // IWYU pragma: export
#include "verify.hpp"          // IWYU pragma: export
