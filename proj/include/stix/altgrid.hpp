#pragma once

#include <cstdint>
#include <vector>

#include "stix/rat.hpp"

// Variant arrangement in R^n built on all 2^(n-1) hypercube diagonal directions
// (+-1, ..., +-1, 1), one line family per direction, each family translated by
// Z^n. The squared distance between two families splits into independent
// contributions from the coordinates where the directions agree and where they
// disagree, each a dual-lattice decode one dimension down.

namespace stix {

struct DiagonalConfig {
  int n = 0;
  std::vector<std::vector<int>> directions;  // entries +-1, last entry always +1
  std::vector<RatVec> offsets;               // one offset in R^n per direction
};

/// All 2^(n-1) diagonal directions in a fixed order: index i has entry k equal
/// to -1 exactly when bit k of i is set (k < n-1); the last entry is +1.
/// Requires 2 <= n <= 16.
std::vector<std::vector<int>> diagonal_directions(int n);

struct DiagonalWitness {
  int i = 0;
  int j = 0;
  RatVec agree;     // signed offset difference on coordinates where directions agree
  RatVec disagree;  // same on coordinates where they disagree
  Rat sq_dist;      // total squared distance between the two families
};

/// Exact squared distance between families i and j (0-based). Both coordinate
/// groups are nonempty for i != j; a group of size one contributes zero.
DiagonalWitness diagonal_pair_sq_dist(const DiagonalConfig& cfg, int i, int j);

/// Minimum of diagonal_pair_sq_dist over all direction pairs.
Rat diagonal_min_sq_dist(const DiagonalConfig& cfg);

/// Closed-form offsets for n = 4, pairwise squared distance at least 5/36:
/// u = (v2/4 - v1/6, -v2(3 v3 + 1)/12, v1/4, 0) per direction v.
DiagonalConfig diagonal_config_n4();

struct DiagonalSearchResult {
  DiagonalConfig config;
  Rat score;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
};

/// Seeded stochastic hill climb over half-integer offsets (entries 0 or 1/2,
/// first family pinned to zero), maximizing the minimum pairwise squared
/// distance. budget counts candidate evaluations; budget 0 scores the initial
/// random configuration. Deterministic for fixed (n, seed, budget). The best
/// configuration is re-verified through the exact general path before being
/// returned. Requires 3 <= n <= 10.
DiagonalSearchResult diagonal_search(int n, std::uint64_t seed, std::uint64_t budget);

}  // namespace stix
