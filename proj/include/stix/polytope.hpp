#pragma once

#include <optional>
#include <vector>

#include "stix/rat.hpp"

// Exact convex polytope engine for the low dimensions used here (<= 5): simplex
// LP over rationals, redundancy removal, vertex enumeration by subset solves,
// and exact volume via a recursive boundary triangulation. Everything is
// deterministic: ties and chart choices always fall to the lexicographically
// smallest option.

namespace stix {

/// Closed half-space { x : normal . x <= rhs }.
struct HalfSpace {
  RatVec normal;
  Rat rhs;
};

struct HPoly {
  int dim = 0;
  std::vector<HalfSpace> cons;
};

struct VPoly {
  int dim = 0;
  std::vector<RatVec> verts;
};

// Coordinates for sum-zero ambient vectors: delete one coordinate (the last by
// default). from_chart restores the deleted coordinate from the sum-zero
// condition; normal_to_chart rewrites an ambient inequality p.x <= b as a chart
// inequality over the remaining coordinates.
struct Chart {
  int ambient_dim = 0;
  int drop = 0;  // 0-based index of the deleted coordinate

  static Chart last(int ambient_dim) { return {ambient_dim, ambient_dim - 1}; }

  RatVec to_chart(const RatVec& x) const;
  RatVec from_chart(const RatVec& y) const;
  RatVec normal_to_chart(const RatVec& p) const;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;  // meaningful only when status == Optimal
};

/// Exact maximum of objective . x over h (two-phase simplex on the dual,
/// Bland's rule, no tolerances).
LpResult lp_max(const HPoly& h, const RatVec& objective);

bool is_feasible(const HPoly& h);

/// True when h is bounded in every coordinate direction. Throws DomainError on
/// an empty h.
bool is_bounded(const HPoly& h);

/// Scales a half-space by the unique positive factor giving a primitive integer
/// normal. Direction is preserved; equal half-spaces get equal forms.
HalfSpace canonical_halfspace(const HalfSpace& hs);

/// Minimal sub-list of constraints describing the same set, canonically sorted.
/// Keeps exactly one copy of duplicated constraints. Throws DomainError if h is
/// empty.
HPoly minimal_hrep(const HPoly& h);

/// All vertices, each the unique solution of dim constraints made tight and
/// feasible for the rest, deduplicated and sorted. Throws DomainError when h is
/// empty, unbounded, or not full-dimensional.
VPoly enumerate_vertices(const HPoly& h);

/// Exact volume in chart coordinates. Triangulates the boundary recursively:
/// cones from the lexicographically smallest vertex over every facet not
/// containing it, facets triangulated the same way one dimension down. h may
/// contain redundant constraints; non-facets are skipped by rank. Throws
/// DomainError when the volume degenerates to zero.
Rat chart_volume(const HPoly& h, const VPoly& v);

/// Index permutation image[i] = y[(a*i + b) mod d], 0-based, gcd(a, d) = 1.
RatVec ext_cyclic_apply(const RatVec& y, int a, int b);

/// Orbit of y under every such permutation, sorted and deduplicated.
std::vector<RatVec> ext_cyclic_orbit(const RatVec& y);

/// Solves a square rational system rows * x = rhs; nullopt when singular.
std::optional<RatVec> solve_square(std::vector<RatVec> rows, RatVec rhs);

}  // namespace stix
