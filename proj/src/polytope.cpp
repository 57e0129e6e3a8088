#include "stix/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace stix {

RatVec Chart::to_chart(const RatVec& x) const {
  if (static_cast<int>(x.size()) != ambient_dim)
    throw DomainError("Chart::to_chart: wrong dimension");
  RatVec out;
  out.reserve(ambient_dim - 1);
  for (int i = 0; i < ambient_dim; ++i)
    if (i != drop) out.push_back(x[i]);
  return out;
}

RatVec Chart::from_chart(const RatVec& y) const {
  if (static_cast<int>(y.size()) != ambient_dim - 1)
    throw DomainError("Chart::from_chart: wrong dimension");
  RatVec out;
  out.reserve(ambient_dim);
  const Rat missing = -vec_sum(y);
  int next = 0;
  for (int i = 0; i < ambient_dim; ++i) {
    if (i == drop)
      out.push_back(missing);
    else
      out.push_back(y[next++]);
  }
  return out;
}

RatVec Chart::normal_to_chart(const RatVec& p) const {
  if (static_cast<int>(p.size()) != ambient_dim)
    throw DomainError("Chart::normal_to_chart: wrong dimension");
  RatVec out;
  out.reserve(ambient_dim - 1);
  for (int i = 0; i < ambient_dim; ++i)
    if (i != drop) out.push_back(p[i] - p[drop]);
  return out;
}

// ---------------------------------------------------------------------------
// Simplex. Everything below works on the equality form
//   minimize f.y  subject to  E y = g, y >= 0
// with a two-phase tableau and Bland's rule. All arithmetic is exact, so there
// are no tolerances anywhere and termination is guaranteed.
// ---------------------------------------------------------------------------

namespace {

enum class EqStatus { Optimal, Unbounded, Infeasible };

struct EqResult {
  EqStatus status;
  Rat value;
};

EqResult solve_eq_min(std::vector<RatVec> E, RatVec g, const RatVec& f) {
  const int r = static_cast<int>(E.size());
  const int m = static_cast<int>(f.size());
  for (int i = 0; i < r; ++i) {
    if (g[i] < 0) {
      g[i] = -g[i];
      for (Rat& e : E[i]) e = -e;
    }
  }
  const int total = m + r;
  std::vector<RatVec> T(r, RatVec(total + 1, Rat(0)));
  std::vector<int> basis(r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < m; ++j) T[i][j] = E[i][j];
    T[i][m + i] = 1;
    T[i][total] = g[i];
    basis[i] = m + i;
  }

  auto pivot = [&](int pr, int pc) {
    const Rat div = T[pr][pc];
    for (Rat& x : T[pr]) x /= div;
    for (int i = 0; i < static_cast<int>(T.size()); ++i) {
      if (i == pr || T[i][pc] == 0) continue;
      const Rat factor = T[i][pc];
      for (int j = 0; j <= total; ++j) T[i][j] -= factor * T[pr][j];
    }
    basis[pr] = pc;
  };

  // One simplex phase; entering restricted to the first allowed_cols columns.
  // Returns false when the objective is unbounded below.
  auto run = [&](const RatVec& cost, int allowed_cols) -> bool {
    while (true) {
      int enter = -1;
      for (int j = 0; j < allowed_cols && enter < 0; ++j) {
        bool basic = false;
        for (int b : basis)
          if (b == j) {
            basic = true;
            break;
          }
        if (basic) continue;
        Rat z = cost[j];
        for (int i = 0; i < static_cast<int>(T.size()); ++i)
          if (cost[basis[i]] != 0 && T[i][j] != 0) z -= cost[basis[i]] * T[i][j];
        if (z < 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < static_cast<int>(T.size()); ++i) {
        if (T[i][enter] <= 0) continue;
        Rat ratio = T[i][total] / T[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  };

  RatVec cost1(total, Rat(0));
  for (int j = m; j < total; ++j) cost1[j] = 1;
  if (!run(cost1, total)) throw std::logic_error("simplex: phase 1 unbounded");
  Rat art = 0;
  for (int i = 0; i < static_cast<int>(T.size()); ++i)
    if (basis[i] >= m) art += T[i][total];
  if (art > 0) return {EqStatus::Infeasible, Rat(0)};

  // Drive leftover zero-value artificials out; rows that cannot pivot are
  // linearly dependent and get dropped.
  for (int i = 0; i < static_cast<int>(T.size());) {
    if (basis[i] < m) {
      ++i;
      continue;
    }
    int pc = -1;
    for (int j = 0; j < m; ++j)
      if (T[i][j] != 0) {
        pc = j;
        break;
      }
    if (pc >= 0) {
      pivot(i, pc);
      ++i;
    } else {
      T.erase(T.begin() + i);
      basis.erase(basis.begin() + i);
    }
  }

  RatVec cost2(total, Rat(0));
  for (int j = 0; j < m; ++j) cost2[j] = f[j];
  if (!run(cost2, m)) return {EqStatus::Unbounded, Rat(0)};
  Rat value = 0;
  for (int i = 0; i < static_cast<int>(T.size()); ++i) value += cost2[basis[i]] * T[i][total];
  return {EqStatus::Optimal, value};
}

void validate_hpoly(const HPoly& h, const char* who) {
  for (const HalfSpace& hs : h.cons)
    if (static_cast<int>(hs.normal.size()) != h.dim)
      throw DomainError(std::string(who) + ": constraint dimension mismatch");
}

}  // namespace

LpResult lp_max(const HPoly& h, const RatVec& objective) {
  validate_hpoly(h, "lp_max");
  const int d = h.dim;
  if (static_cast<int>(objective.size()) != d) throw DomainError("lp_max: objective dimension mismatch");
  const int m = static_cast<int>(h.cons.size());
  if (d == 0) {
    for (const HalfSpace& hs : h.cons)
      if (hs.rhs < 0) return {LpStatus::Infeasible, Rat(0)};
    return {LpStatus::Optimal, Rat(0)};
  }

  // Dual of max c.x s.t. Ax <= b (x free):  min b.y s.t. A^T y = c, y >= 0.
  std::vector<RatVec> E(d, RatVec(m, Rat(0)));
  RatVec b(m);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < d; ++k) E[k][i] = h.cons[i].normal[k];
    b[i] = h.cons[i].rhs;
  }
  EqResult dual = solve_eq_min(E, objective, b);
  if (dual.status == EqStatus::Optimal) return {LpStatus::Optimal, dual.value};
  if (dual.status == EqStatus::Unbounded) return {LpStatus::Infeasible, Rat(0)};
  // Dual infeasible: primal is unbounded or empty. A Farkas run settles which.
  EqResult feas = solve_eq_min(E, RatVec(d, Rat(0)), b);
  if (feas.status == EqStatus::Optimal) return {LpStatus::Unbounded, Rat(0)};
  return {LpStatus::Infeasible, Rat(0)};
}

bool is_feasible(const HPoly& h) {
  return lp_max(h, RatVec(h.dim, Rat(0))).status == LpStatus::Optimal;
}

bool is_bounded(const HPoly& h) {
  if (!is_feasible(h)) throw DomainError("is_bounded: empty polytope");
  for (int k = 0; k < h.dim; ++k) {
    RatVec obj(h.dim, Rat(0));
    obj[k] = 1;
    if (lp_max(h, obj).status == LpStatus::Unbounded) return false;
    obj[k] = -1;
    if (lp_max(h, obj).status == LpStatus::Unbounded) return false;
  }
  return true;
}

HalfSpace canonical_halfspace(const HalfSpace& hs) {
  using boost::multiprecision::abs;
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  Int den_lcm = 1;
  for (const Rat& x : hs.normal) den_lcm = lcm(den_lcm, rat_den(x));
  Int num_gcd = 0;
  for (const Rat& x : hs.normal) num_gcd = gcd(num_gcd, abs(rat_num(x) * (den_lcm / rat_den(x))));
  if (num_gcd == 0) throw DomainError("canonical_halfspace: zero normal");
  const Rat scale(den_lcm, num_gcd);
  return {vec_scale(scale, hs.normal), hs.rhs * scale};
}

namespace {

using CanonKey = std::pair<RatVec, Rat>;

CanonKey canon_key(const HalfSpace& hs) {
  HalfSpace c = canonical_halfspace(hs);
  return {std::move(c.normal), std::move(c.rhs)};
}

}  // namespace

HPoly minimal_hrep(const HPoly& h) {
  validate_hpoly(h, "minimal_hrep");
  if (!is_feasible(h)) throw DomainError("minimal_hrep: empty polytope");
  std::vector<HalfSpace> kept = h.cons;
  for (size_t i = 0; i < kept.size();) {
    HPoly rest{h.dim, {}};
    rest.cons.reserve(kept.size() - 1);
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) rest.cons.push_back(kept[j]);
    LpResult r = lp_max(rest, kept[i].normal);
    if (r.status == LpStatus::Optimal && r.value <= kept[i].rhs)
      kept.erase(kept.begin() + i);
    else
      ++i;
  }
  std::sort(kept.begin(), kept.end(), [](const HalfSpace& a, const HalfSpace& b) {
    return canon_key(a) < canon_key(b);
  });
  return {h.dim, std::move(kept)};
}

std::optional<RatVec> solve_square(std::vector<RatVec> rows, RatVec rhs) {
  const int n = static_cast<int>(rows.size());
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (rows[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(rows[piv], rows[c]);
    std::swap(rhs[piv], rhs[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || rows[r][c] == 0) continue;
      const Rat factor = rows[r][c] / rows[c][c];
      for (int j = c; j < n; ++j) rows[r][j] -= factor * rows[c][j];
      rhs[r] -= factor * rhs[c];
    }
  }
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / rows[i][i];
  return x;
}

namespace {

int matrix_rank(std::vector<RatVec> rows) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][c] == 0) continue;
      const Rat factor = rows[r][c] / rows[rank][c];
      for (int j = c; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

int affine_rank(const std::vector<RatVec>& pts) {
  if (pts.size() < 2) return 0;
  std::vector<RatVec> diffs;
  diffs.reserve(pts.size() - 1);
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(vec_sub(pts[i], pts[0]));
  return matrix_rank(std::move(diffs));
}

}  // namespace

VPoly enumerate_vertices(const HPoly& h) {
  validate_hpoly(h, "enumerate_vertices");
  const int d = h.dim;
  if (d < 1) throw DomainError("enumerate_vertices: need dim >= 1");
  if (!is_feasible(h)) throw DomainError("enumerate_vertices: empty polytope");
  if (!is_bounded(h)) throw DomainError("enumerate_vertices: unbounded polytope");
  const int m = static_cast<int>(h.cons.size());

  std::set<RatVec> found;
  std::vector<int> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<RatVec> rows;
    RatVec rhs;
    rows.reserve(d);
    rhs.reserve(d);
    for (int t : idx) {
      rows.push_back(h.cons[t].normal);
      rhs.push_back(h.cons[t].rhs);
    }
    if (auto x = solve_square(std::move(rows), std::move(rhs))) {
      bool ok = true;
      for (const HalfSpace& hs : h.cons)
        if (vec_dot(hs.normal, *x) > hs.rhs) {
          ok = false;
          break;
        }
      if (ok) found.insert(std::move(*x));
    }
    int pos = d - 1;
    while (pos >= 0 && idx[pos] == m - d + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int t = pos + 1; t < d; ++t) idx[t] = idx[t - 1] + 1;
  }
  if (found.empty()) throw std::logic_error("enumerate_vertices: bounded nonempty polytope without vertices");
  VPoly out{d, std::vector<RatVec>(found.begin(), found.end())};
  if (affine_rank(out.verts) < d)
    throw DomainError("enumerate_vertices: polytope is not full-dimensional");
  return out;
}

// ---------------------------------------------------------------------------
// Volume. triangulate() returns (dim+1)-tuples of point ids; the caller turns
// them into determinants in the original chart coordinates. Recursion invariant:
// deleting a coordinate whose facet-normal entry is nonzero is injective on the
// facet, so labeled points stay distinct all the way down.
// ---------------------------------------------------------------------------

namespace {

struct LabeledPoint {
  RatVec x;
  int id;
};

RatVec erase_coord(const RatVec& x, int k) {
  RatVec out;
  out.reserve(x.size() - 1);
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (i != k) out.push_back(x[i]);
  return out;
}

std::vector<HalfSpace> dedupe_canonical(const std::vector<HalfSpace>& cons) {
  std::set<CanonKey> seen;
  std::vector<HalfSpace> out;
  out.reserve(cons.size());
  for (const HalfSpace& hs : cons) {
    HalfSpace c = canonical_halfspace(hs);
    CanonKey key{c.normal, c.rhs};
    if (seen.insert(std::move(key)).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const HalfSpace& a, const HalfSpace& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.rhs < b.rhs;
  });
  return out;
}

void triangulate(const std::vector<LabeledPoint>& pts, const std::vector<HalfSpace>& cons_in,
                 int dim, std::vector<std::vector<int>>& out) {
  if (pts.empty()) return;
  if (dim == 1) {
    int lo = 0;
    int hi = 0;
    for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
      if (pts[i].x[0] < pts[lo].x[0]) lo = i;
      if (pts[i].x[0] > pts[hi].x[0]) hi = i;
    }
    if (pts[lo].x[0] == pts[hi].x[0]) return;
    out.push_back({pts[lo].id, pts[hi].id});
    return;
  }

  int v0 = 0;
  for (int i = 1; i < static_cast<int>(pts.size()); ++i)
    if (pts[i].x < pts[v0].x) v0 = i;

  const std::vector<HalfSpace> cons = dedupe_canonical(cons_in);
  for (size_t ci = 0; ci < cons.size(); ++ci) {
    const HalfSpace& hs = cons[ci];
    if (vec_dot(hs.normal, pts[v0].x) == hs.rhs) continue;
    std::vector<LabeledPoint> active;
    for (const LabeledPoint& p : pts)
      if (vec_dot(hs.normal, p.x) == hs.rhs) active.push_back(p);
    if (static_cast<int>(active.size()) < dim) continue;
    {
      std::vector<RatVec> diffs;
      diffs.reserve(active.size() - 1);
      for (size_t i = 1; i < active.size(); ++i) diffs.push_back(vec_sub(active[i].x, active[0].x));
      if (matrix_rank(std::move(diffs)) != dim - 1) continue;
    }

    int k = 0;
    while (hs.normal[k] == 0) ++k;

    std::vector<HalfSpace> subcons;
    subcons.reserve(cons.size() - 1);
    for (size_t oi = 0; oi < cons.size(); ++oi) {
      if (oi == ci) continue;
      const HalfSpace& other = cons[oi];
      const Rat factor = other.normal[k] / hs.normal[k];
      RatVec nn;
      nn.reserve(dim - 1);
      bool all_zero = true;
      for (int j = 0; j < dim; ++j) {
        if (j == k) continue;
        Rat val = other.normal[j] - factor * hs.normal[j];
        if (val != 0) all_zero = false;
        nn.push_back(std::move(val));
      }
      if (all_zero) continue;
      subcons.push_back({std::move(nn), other.rhs - factor * hs.rhs});
    }

    std::vector<LabeledPoint> subpts;
    subpts.reserve(active.size());
    for (const LabeledPoint& p : active) subpts.push_back({erase_coord(p.x, k), p.id});

    std::vector<std::vector<int>> sub;
    triangulate(subpts, subcons, dim - 1, sub);
    for (std::vector<int>& s : sub) {
      s.push_back(pts[v0].id);
      out.push_back(std::move(s));
    }
  }
}

Rat det(std::vector<RatVec> m) {
  const int n = static_cast<int>(m.size());
  Rat result = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      result = -result;
    }
    result *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rat factor = m[r][c] / m[c][c];
      for (int j = c; j < n; ++j) m[r][j] -= factor * m[c][j];
    }
  }
  return result;
}

}  // namespace

Rat chart_volume(const HPoly& h, const VPoly& v) {
  validate_hpoly(h, "chart_volume");
  if (h.dim != v.dim) throw DomainError("chart_volume: H and V dimensions differ");
  const int d = h.dim;
  if (d == 0) return Rat(1);
  if (v.verts.empty()) throw DomainError("chart_volume: no vertices");
  for (const RatVec& x : v.verts)
    for (const HalfSpace& hs : h.cons)
      if (vec_dot(hs.normal, x) > hs.rhs)
        throw DomainError("chart_volume: vertex violates a constraint");

  std::vector<LabeledPoint> pts;
  pts.reserve(v.verts.size());
  for (int i = 0; i < static_cast<int>(v.verts.size()); ++i) pts.push_back({v.verts[i], i});

  std::vector<std::vector<int>> simplices;
  triangulate(pts, h.cons, d, simplices);

  Int fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  Rat vol = 0;
  for (const std::vector<int>& s : simplices) {
    std::vector<RatVec> rows;
    rows.reserve(d);
    for (int t = 1; t <= d; ++t) rows.push_back(vec_sub(v.verts[s[t]], v.verts[s[0]]));
    Rat dd = det(std::move(rows));
    vol += dd < 0 ? -dd : dd;
  }
  vol /= Rat(fact);
  if (vol == 0) throw DomainError("chart_volume: degenerate polytope (zero volume)");
  return vol;
}

RatVec ext_cyclic_apply(const RatVec& y, int a, int b) {
  const int d = static_cast<int>(y.size());
  if (d == 0) throw DomainError("ext_cyclic_apply: empty vector");
  if (std::gcd(((a % d) + d) % d, d) != 1 && d > 1)
    throw DomainError("ext_cyclic_apply: a must be coprime to the length");
  RatVec out(d);
  for (int i = 0; i < d; ++i) {
    const long long pos = ((static_cast<long long>(a) * i + b) % d + d) % d;
    out[i] = y[static_cast<size_t>(pos)];
  }
  return out;
}

std::vector<RatVec> ext_cyclic_orbit(const RatVec& y) {
  const int d = static_cast<int>(y.size());
  if (d == 0) throw DomainError("ext_cyclic_orbit: empty vector");
  std::set<RatVec> orbit;
  for (int a = 1; a <= d; ++a) {
    if (std::gcd(a % d, d) != 1 && d > 1) continue;
    for (int b = 0; b < d; ++b) orbit.insert(ext_cyclic_apply(y, a, b));
  }
  return {orbit.begin(), orbit.end()};
}

}  // namespace stix
