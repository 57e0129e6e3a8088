#include "stix/lines.hpp"

#include <algorithm>

namespace stix {

LineRep line_rep(const OffsetFamily& fam, int i) {
  if (i < 0 || i > fam.n) throw DomainError("line_rep: family index out of range");
  return {i, fam.u[i], fam.v[i]};
}

RatVec pair_witness_vector(const OffsetFamily& fam, int i, int j) {
  const int n = fam.n;
  if (n < 3) throw DomainError("pair_witness_vector: need n >= 3");
  if (i == j || i < 0 || j < 0 || i > n || j > n)
    throw DomainError("pair_witness_vector: need two distinct family indices in 0..n");
  RatVec diff = vec_sub(fam.u[i], fam.u[j]);
  RatVec cut = drop_coord(diff, std::max(i, j));
  cut = drop_coord(cut, std::min(i, j));
  return project_sum_zero(cut);
}

PairWitness min_pair_sq_dist(const OffsetFamily& fam, int i, int j) {
  RatVec w = pair_witness_vector(fam, i, j);
  DecodeResult d = nearest_lattice_point(w, {LatticeFamily::AStar, fam.n - 2});
  return {i, j, std::move(w), d.sq_dist, std::move(d.nearest)};
}

bool is_optimal_family(const OffsetFamily& fam) {
  const Rat bound = covering_sq_radius(fam.n - 2);
  for (int i = 0; i <= fam.n; ++i)
    for (int j = i + 1; j <= fam.n; ++j)
      if (min_pair_sq_dist(fam, i, j).sq_dist != bound) return false;
  return true;
}

}  // namespace stix
