#include "stix/coverage.hpp"

#include <functional>
#include <set>
#include <utility>

#include "stix/lattice.hpp"

namespace stix {

ProjectedPointSet projected_point_set(const OffsetFamily& fam, const Rat& radius_sq) {
  const int n = fam.n;
  if (n < 3) throw DomainError("projected_point_set: need n >= 3");
  std::set<RatVec> points;
  const RatVec zero(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    RatVec q = drop_coord(drop_coord(fam.u[i], n), i);
    std::vector<RatVec> shifts = lattice_points_in_ball(n - 2, vec_neg(q), radius_sq);
    for (const RatVec& p : shifts) {
      RatVec rest = vec_add(q, p);
      RatVec x;
      x.reserve(n);
      int next = 0;
      for (int c = 0; c < n; ++c) x.push_back(c == i ? Rat(0) : rest[next++]);
      if (x != zero) points.insert(std::move(x));
    }
  }
  return {n, radius_sq, std::vector<RatVec>(points.begin(), points.end())};
}

namespace {

// Shared radius-doubling loop: generate sites within the squared radius, cut
// the origin's Voronoi cell, and stop once no site beyond the radius could
// still contribute a facet (radius_sq >= 4 * squared circumradius).
Cell voronoi_cell(int ambient_dim, int chart_drop, Rat radius_sq, const Rat& radius_cap,
                  const std::function<std::vector<RatVec>(const Rat&)>& sites_within) {
  if (chart_drop == -1) chart_drop = ambient_dim - 1;
  if (chart_drop < 0 || chart_drop >= ambient_dim)
    throw DomainError("voronoi_cell: chart coordinate out of range");
  const Chart chart{ambient_dim, chart_drop};

  for (int doublings = 0; doublings <= 64; ++doublings) {
    if (radius_cap > 0 && radius_sq > radius_cap)
      throw ConvergenceError("voronoi_cell: radius cap exceeded before convergence");
    std::vector<RatVec> sites = sites_within(radius_sq);
    if (sites.empty()) {
      radius_sq *= 2;
      continue;
    }
    HPoly h{ambient_dim - 1, {}};
    h.cons.reserve(sites.size());
    for (const RatVec& p : sites) h.cons.push_back({chart.normal_to_chart(p), norm_sq(p) / 2});
    if (!is_bounded(h)) {
      radius_sq *= 2;
      continue;
    }
    HPoly hmin = minimal_hrep(h);
    VPoly v = enumerate_vertices(hmin);
    Rat circum_sq = 0;
    for (const RatVec& vert : v.verts) {
      Rat a = norm_sq(chart.from_chart(vert));
      if (a > circum_sq) circum_sq = a;
    }
    if (radius_sq >= 4 * circum_sq)
      return {chart, std::move(hmin), std::move(v), radius_sq, std::move(sites)};
    radius_sq *= 2;
  }
  throw ConvergenceError("voronoi_cell: radius doubling did not converge");
}

}  // namespace

Cell cross_section_cell(const OffsetFamily& fam, int chart_drop, const Rat& radius_cap) {
  const int n = fam.n;
  if (n < 3) throw DomainError("cross_section_cell: need n >= 3");
  return voronoi_cell(n, chart_drop, 4 * covering_sq_radius(n - 2), radius_cap,
                      [&fam](const Rat& r2) { return projected_point_set(fam, r2).points; });
}

Cell lattice_cell(int d, int chart_drop, const Rat& radius_cap) {
  if (d < 1) throw DomainError("lattice_cell: need d >= 1");
  const RatVec origin(d + 1, Rat(0));
  return voronoi_cell(d + 1, chart_drop, 4 * covering_sq_radius(d), radius_cap,
                      [d, origin](const Rat& r2) {
                        std::vector<RatVec> pts = lattice_points_in_ball(d, origin, r2);
                        std::vector<RatVec> out;
                        out.reserve(pts.size());
                        for (RatVec& p : pts)
                          if (p != origin) out.push_back(std::move(p));
                        return out;
                      });
}

CoverageReport coverage_fraction(const OffsetFamily& fam, int chart_drop, const Rat& radius_cap) {
  const int n = fam.n;
  if (n < 3)
    throw DomainError("coverage_fraction: need n >= 3 (at n = 2 all offsets vanish and the "
                      "arrangement degenerates to intersecting lines)");
  if (parallel_line_sq_dist(n) < covering_sq_radius(n - 2))
    throw DomainError("coverage_fraction: for n >= 13 parallel lines within a family are closer "
                      "than transverse families (" + rat_str(parallel_line_sq_dist(n)) + " < " +
                      rat_str(covering_sq_radius(n - 2)) +
                      " squared), so disjoint equal-radius prisms no longer exist");

  CoverageReport rep;
  rep.n = n;
  rep.cell = cross_section_cell(fam, chart_drop, radius_cap);
  rep.cell_volume = chart_volume(rep.cell.hrep, rep.cell.vrep);

  Cell latt = lattice_cell(n - 1, chart_drop, radius_cap);
  rep.lattice_volume = chart_volume(latt.hrep, latt.vrep);
  if (rep.lattice_volume != Rat(1, n))
    throw std::logic_error("coverage_fraction: lattice cell volume is not 1/n");

  rep.fraction = Rat(n + 1) * rep.cell_volume / rep.lattice_volume;
  return rep;
}

CoverageReport coverage_fraction(int n, int chart_drop, const Rat& radius_cap) {
  return coverage_fraction(make_offset_family(n), chart_drop, radius_cap);
}

}  // namespace stix
