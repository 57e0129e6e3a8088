#pragma once

#include <vector>

#include "stix/field.hpp"
#include "stix/lattice.hpp"

// Distances between the n+1 families of lines u^(i) + A_n + R v^(i). The minimum
// distance between two families reduces to decoding one witness vector in the
// dual lattice two dimensions down.

namespace stix {

struct LineRep {
  int index = 0;   // 0-based family index
  RatVec offset;
  RatVec direction;
};

LineRep line_rep(const OffsetFamily& fam, int i);

struct PairWitness {
  int i = 0;
  int j = 0;
  RatVec w;        // witness vector, n-1 coordinates, sum zero
  Rat sq_dist;     // squared distance between the two families
  RatVec nearest;  // lattice point realizing it
};

/// Witness of the pair (i, j): difference of offsets, with coordinates max(i,j)
/// then min(i,j) deleted, projected back to the sum-zero hyperplane. 0-based
/// indices; requires n >= 3 and i != j.
RatVec pair_witness_vector(const OffsetFamily& fam, int i, int j);

/// Exact squared minimum distance between families i and j (0-based).
PairWitness min_pair_sq_dist(const OffsetFamily& fam, int i, int j);

/// True when every family pair attains the squared covering radius of A*_{n-2},
/// the best possible common distance.
bool is_optimal_family(const OffsetFamily& fam);

}  // namespace stix
