#pragma once

#include <vector>

#include "stix/rat.hpp"

// Root lattice A_d (sum-zero integer vectors in d+1 coordinates) and its dual
// A*_d (sum-zero vectors whose pairwise coordinate differences are integers),
// both living in the sum-zero hyperplane of R^{d+1}. Dimension d = 0 is the
// single point (0) and is accepted wherever it makes sense so callers never
// special-case it.

namespace stix {

enum class LatticeFamily { A, AStar };

struct LatticeRef {
  LatticeFamily family = LatticeFamily::AStar;
  int d = 0;
};

struct DecodeResult {
  Rat sq_dist;
  RatVec nearest;
};

/// Orthogonal projection of x onto the sum-zero hyperplane (subtract the mean).
/// Requires dim >= 2.
RatVec project_sum_zero(const RatVec& x);

/// Deletes the coordinate at 0-based position idx. The result has one fewer entry;
/// an empty vector is a legal result.
RatVec drop_coord(const RatVec& x, int idx);

/// The d+1 shortest nonzero vectors of A*_d embedded in R^{d+1}: entry i equals
/// d/(d+1) at position i and -1/(d+1) elsewhere. Requires d >= 1.
std::vector<RatVec> shortest_vectors(int d);

/// Nearest lattice point to a sum-zero x (d+1 coordinates) and the exact squared
/// distance. Ties broken deterministically. Throws DomainError if x does not sum
/// to zero or has the wrong length.
DecodeResult nearest_lattice_point(const RatVec& x, LatticeRef lat);

/// Squared covering radius of A*_d: d(d+2) / (12(d+1)). Zero at d = 0.
Rat covering_sq_radius(int d);

/// Vertices of the Voronoi cell of A*_d around the origin: all permutations of
/// ((2(i-1) - d) / (2(d+1)))_{i=1..d+1}. Requires 0 <= d <= 8 (factorial growth).
std::vector<RatVec> permutohedron_vertices(int d);

/// True when the values, reduced mod 1, form an arithmetic progression with gap
/// exactly 1/parts. Requires xs.size() == parts >= 1.
bool uniform_mod_one(const std::vector<Rat>& xs, int parts);

/// Squared distance between distinct parallel lines u + A_n + Rv within one
/// family: 1 - 1/n. Requires n >= 2.
Rat parallel_line_sq_dist(int n);

/// All points of A*_d with |p - center|^2 <= radius_sq, center sum-zero with d+1
/// coordinates. Exact membership test; deterministic order.
std::vector<RatVec> lattice_points_in_ball(int d, const RatVec& center, const Rat& radius_sq);

}  // namespace stix
