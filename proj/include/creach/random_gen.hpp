#pragma once

#include <cstdint>
#include <random>

#include "creach/automaton.hpp"

namespace creach {

// Uniform draw from [0, k) by rejection sampling. mt19937_64 is fully pinned
// by the standard, so results are identical across platforms (the standard
// distributions are not, which is why they are not used here).
std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t k);

// Unbiased Fisher-Yates shuffle of the identity, i from n-1 down to 1,
// j = bounded_uniform(i+1).
Transformation random_permutation(int n, std::mt19937_64& rng);

// Identity with one state collapsed onto another (defect exactly 1),
// optionally post-composed with a random permutation (which moves the
// excluded state out of the collapsed pair, producing non-standardized
// instances).
Transformation random_defect_one(int n, std::mt19937_64& rng, bool post_permute);

// Defect letter "a" plus m random permutation letters "b", "c", ...
// Deterministic for fixed (n, m, seed, post_permute). Draw order: collapse
// pair, optional post permutation, then the m permutation letters.
Automaton random_almost_group(int n, int m, std::uint64_t seed,
                              bool post_permute = false);

}  // namespace creach
