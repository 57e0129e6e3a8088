#pragma once

#include <vector>

#include "stix/field.hpp"
#include "stix/polytope.hpp"

// Covered-volume computation. The fraction of space covered by the thickened
// line arrangement equals (n+1) * vol(V) / vol(W), where V is the Voronoi cell
// of the origin against the other families' nearest points projected along the
// reference direction, and W the Voronoi cell of the dual lattice one dimension
// down. Both volumes are computed exactly in a shared chart, where every metric
// correction factor cancels.

namespace stix {

struct ProjectedPointSet {
  int n = 0;
  Rat radius_sq;
  std::vector<RatVec> points;  // sum-zero vectors in R^n, origin excluded
};

/// Candidate nearest points of the transverse families to the reference line:
/// for each family i < n, the set Q_i + A*_{n-2} embedded with a zero at
/// coordinate i, where Q_i is u^(i) with coordinates i and n deleted. Keeps
/// points of squared norm <= radius_sq. Requires n >= 3.
ProjectedPointSet projected_point_set(const OffsetFamily& fam, const Rat& radius_sq);

struct Cell {
  Chart chart;
  HPoly hrep;                 // minimal H-representation, canonically sorted
  VPoly vrep;                 // vertices in chart coordinates, sorted
  Rat radius_sq;              // enumeration radius at convergence
  std::vector<RatVec> sites;  // ambient generating points at that radius
};

/// Voronoi cell of the origin against projected_point_set(fam), in the chart
/// deleting coordinate chart_drop (0-based; -1 means the last). The enumeration
/// radius starts at four times the squared covering radius of A*_{n-2} and
/// doubles until no point beyond it could contribute a facet. A positive
/// radius_cap bounds the squared radius; exceeding it throws ConvergenceError.
Cell cross_section_cell(const OffsetFamily& fam, int chart_drop = -1,
                        const Rat& radius_cap = Rat(0));

/// Voronoi cell of the origin in A*_d by the same machinery. Requires d >= 1.
Cell lattice_cell(int d, int chart_drop = -1, const Rat& radius_cap = Rat(0));

struct CoverageReport {
  int n = 0;
  Cell cell;
  Rat cell_volume;     // chart volume of the cross-section cell
  Rat lattice_volume;  // chart volume of the A*_{n-1} cell; always 1/n
  Rat fraction;        // covered fraction of space
};

/// Exact covered fraction for the family. Refuses n < 3 (degenerate) and any n
/// where parallel lines within one family are closer than transverse families
/// (n >= 13), since the disjoint-prism picture fails there.
CoverageReport coverage_fraction(const OffsetFamily& fam, int chart_drop = -1,
                                 const Rat& radius_cap = Rat(0));

/// Canonical-construction convenience overload; n must be a prime power.
CoverageReport coverage_fraction(int n, int chart_drop = -1, const Rat& radius_cap = Rat(0));

}  // namespace stix
