#include <doctest.h>

#include <algorithm>
#include <set>

#include "stix/coverage.hpp"
#include "stix/errors.hpp"
#include "stix/lattice.hpp"

using namespace stix;

namespace {

std::set<std::pair<RatVec, Rat>> canon_set(const HPoly& h) {
  std::set<std::pair<RatVec, Rat>> out;
  for (const HalfSpace& c : h.cons) {
    const HalfSpace k = canonical_halfspace(c);
    out.insert({k.normal, k.rhs});
  }
  return out;
}

}  // namespace

TEST_CASE("projected point set basics") {
  const OffsetFamily fam = make_offset_family(3);
  const ProjectedPointSet ps = projected_point_set(fam, Rat(1));
  CHECK(ps.n == 3);
  CHECK(!ps.points.empty());
  std::set<RatVec> dedup(ps.points.begin(), ps.points.end());
  CHECK(dedup.size() == ps.points.size());
  for (const RatVec& p : ps.points) {
    REQUIRE(p.size() == 3);
    CHECK(is_sum_zero(p));
    CHECK(norm_sq(p) <= Rat(1));
    CHECK(p != RatVec(3, Rat(0)));
  }
}

TEST_CASE("hexagonal cross-section at n = 3") {
  const CoverageReport rep = coverage_fraction(3);
  CHECK(rep.fraction == Rat(3, 4));
  CHECK(rep.cell_volume == Rat(1, 16));
  CHECK(rep.lattice_volume == Rat(1, 3));
  CHECK(rep.cell.hrep.cons.size() == 6);
  CHECK(rep.cell.vrep.verts.size() == 6);
}

TEST_CASE("rhombic-dodecahedral cross-section at n = 4") {
  const CoverageReport rep = coverage_fraction(4);
  CHECK(rep.fraction == Rat(20, 27));
  CHECK(rep.cell_volume == Rat(1, 27));
  CHECK(rep.lattice_volume == Rat(1, 4));
  CHECK(rep.cell.hrep.cons.size() == 12);
  CHECK(rep.cell.vrep.verts.size() == 14);

  // the known facet description x_i - x_j <= 1/3, mapped into the same chart
  HPoly expect{3, {}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      RatVec n(4, Rat(0));
      n[i] = Rat(1);
      n[j] = Rat(-1);
      expect.cons.push_back({rep.cell.chart.normal_to_chart(n), Rat(1, 3)});
    }
  CHECK(canon_set(rep.cell.hrep) == canon_set(expect));
}

TEST_CASE("five-dimensional cross-section") {
  const CoverageReport rep = coverage_fraction(5);
  CHECK(rep.fraction == Rat(40465625, 55059264));
  CHECK(rep.lattice_volume == Rat(1, 5));
  CHECK(rep.cell.hrep.cons.size() == 20);
  CHECK(rep.fraction == Rat(6) * rep.cell_volume / rep.lattice_volume);
}

TEST_CASE("voronoi cells of the dual lattice in chart form") {
  const int expected_facets[] = {0, 2, 6, 14, 30};
  for (int d = 1; d <= 4; ++d) {
    const Cell cell = lattice_cell(d);
    CHECK(chart_volume(cell.hrep, cell.vrep) == Rat(1, d + 1));
    CHECK(cell.hrep.cons.size() == static_cast<size_t>(expected_facets[d]));
  }
}

TEST_CASE("lattice cell vertices are the permutohedron vertices") {
  const Cell cell = lattice_cell(3);
  std::set<RatVec> got(cell.vrep.verts.begin(), cell.vrep.verts.end());
  std::set<RatVec> expect;
  for (const RatVec& v : permutohedron_vertices(3)) expect.insert(cell.chart.to_chart(v));
  CHECK(got == expect);
}

TEST_CASE("coverage does not depend on the chart") {
  for (int drop = 0; drop < 3; ++drop)
    CHECK(coverage_fraction(3, drop).fraction == Rat(3, 4));
  for (int drop = 0; drop < 4; ++drop) {
    const CoverageReport rep = coverage_fraction(4, drop);
    CHECK(rep.fraction == Rat(20, 27));
    CHECK(rep.cell.hrep.cons.size() == 12);
    CHECK(rep.cell.vrep.verts.size() == 14);
  }
}

TEST_CASE("radius caps") {
  CHECK(coverage_fraction(4, -1, Rat(100)).fraction == Rat(20, 27));
  CHECK_THROWS_AS(coverage_fraction(4, -1, Rat(1, 100)), ConvergenceError);
}

TEST_CASE("out-of-domain sizes are refused") {
  CHECK_THROWS_AS(coverage_fraction(2), DomainError);
  CHECK_THROWS_AS(coverage_fraction(13), DomainError);
  CHECK_THROWS_AS(coverage_fraction(16), DomainError);
  CHECK_THROWS_AS(coverage_fraction(6), DomainError);  // not a prime power
}

TEST_CASE("custom field ordering leaves the fraction unchanged") {
  const FieldTable f = field_make_custom(4, {0, 1, 3, 2}, 3);
  const OffsetFamily fam = offsets_from_matrix(log_matrix(f));
  const CoverageReport rep = coverage_fraction(fam);
  CHECK(rep.fraction == Rat(20, 27));
}
