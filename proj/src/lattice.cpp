#include "stix/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace stix {

RatVec project_sum_zero(const RatVec& x) {
  const int m = static_cast<int>(x.size());
  if (m < 2) throw DomainError("project_sum_zero: need at least 2 coordinates");
  Rat mean = vec_sum(x) / m;
  RatVec out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] - mean;
  return out;
}

RatVec drop_coord(const RatVec& x, int idx) {
  if (idx < 0 || idx >= static_cast<int>(x.size()))
    throw DomainError("drop_coord: index out of range");
  RatVec out;
  out.reserve(x.size() - 1);
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (i != idx) out.push_back(x[i]);
  return out;
}

std::vector<RatVec> shortest_vectors(int d) {
  if (d < 1) throw DomainError("shortest_vectors: need d >= 1");
  std::vector<RatVec> out(d + 1, RatVec(d + 1, Rat(-1, d + 1)));
  for (int i = 0; i <= d; ++i) out[i][i] = Rat(d, d + 1);
  return out;
}

namespace {

// Nearest point of A_d (sum-zero integer vectors) to a sum-zero x: round every
// coordinate, then repair the rounding surplus where it is cheapest.
RatVec nearest_in_a(const RatVec& x) {
  const int m = static_cast<int>(x.size());
  std::vector<Int> f(m);
  std::vector<Rat> delta(m);
  Int surplus = 0;
  for (int i = 0; i < m; ++i) {
    f[i] = round_nearest(x[i]);
    delta[i] = x[i] - Rat(f[i]);
    surplus += f[i];
  }
  if (surplus != 0) {
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    if (surplus > 0) {
      std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return delta[a] != delta[b] ? delta[a] < delta[b] : a < b;
      });
      long k = surplus.convert_to<long>();
      for (long t = 0; t < k; ++t) f[idx[t]] -= 1;
    } else {
      std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return delta[a] != delta[b] ? delta[a] > delta[b] : a < b;
      });
      long k = (-surplus).convert_to<long>();
      for (long t = 0; t < k; ++t) f[idx[t]] += 1;
    }
  }
  RatVec out(m);
  for (int i = 0; i < m; ++i) out[i] = Rat(f[i]);
  return out;
}

}  // namespace

DecodeResult nearest_lattice_point(const RatVec& x, LatticeRef lat) {
  if (static_cast<int>(x.size()) != lat.d + 1)
    throw DomainError("nearest_lattice_point: x must have d+1 coordinates");
  if (!is_sum_zero(x)) throw DomainError("nearest_lattice_point: x must sum to zero");

  if (lat.family == LatticeFamily::A || lat.d == 0) {
    RatVec y = nearest_in_a(x);
    return {norm_sq(vec_sub(x, y)), y};
  }

  // A*_d is the union of d+1 translates of A_d along the shortest vector.
  const int d = lat.d;
  RatVec glue(d + 1, Rat(-1, d + 1));
  glue[0] = Rat(d, d + 1);

  DecodeResult best;
  bool have = false;
  RatVec shift(d + 1, Rat(0));
  for (int k = 0; k <= d; ++k) {
    RatVec z = nearest_in_a(vec_sub(x, shift));
    RatVec cand = vec_add(z, shift);
    Rat sq = norm_sq(vec_sub(x, cand));
    if (!have || sq < best.sq_dist) {
      best = {sq, cand};
      have = true;
    }
    shift = vec_add(shift, glue);
  }
  return best;
}

Rat covering_sq_radius(int d) {
  if (d < 0) throw DomainError("covering_sq_radius: need d >= 0");
  return Rat(Int(d) * (d + 2), Int(12) * (d + 1));
}

std::vector<RatVec> permutohedron_vertices(int d) {
  if (d < 0 || d > 8) throw DomainError("permutohedron_vertices: need 0 <= d <= 8");
  RatVec base(d + 1);
  for (int i = 1; i <= d + 1; ++i) base[i - 1] = Rat(2 * (i - 1) - d, 2 * (d + 1));
  std::vector<RatVec> out;
  std::sort(base.begin(), base.end());
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

bool uniform_mod_one(const std::vector<Rat>& xs, int parts) {
  if (parts < 1) throw DomainError("uniform_mod_one: need parts >= 1");
  if (static_cast<int>(xs.size()) != parts)
    throw DomainError("uniform_mod_one: value count must equal parts");
  std::vector<Rat> res(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) res[i] = xs[i] - Rat(floor_int(xs[i]));
  std::sort(res.begin(), res.end());
  if (parts == 1) return true;
  const Rat gap(1, parts);
  for (int i = 0; i + 1 < parts; ++i)
    if (res[i + 1] - res[i] != gap) return false;
  return res[0] + 1 - res[parts - 1] == gap;
}

Rat parallel_line_sq_dist(int n) {
  if (n < 2) throw DomainError("parallel_line_sq_dist: need n >= 2");
  return Rat(n - 1, n);
}

namespace {

void enumerate_coset(const RatVec& c, const RatVec& glue_shift, const Rat& radius_sq,
                     const Rat& global_reach, int depth, Int partial, RatVec& z,
                     Rat budget, std::vector<RatVec>& out) {
  const int m = static_cast<int>(c.size());
  if (depth == m - 1) {
    Rat last = Rat(-partial);
    Rat cost = (last - c[depth]) * (last - c[depth]);
    if (cost <= budget) {
      z[depth] = last;
      out.push_back(vec_add(z, glue_shift));
    }
    return;
  }
  Int lo = floor_int(c[depth] - global_reach);
  Int hi = floor_int(c[depth] + global_reach) + 1;
  for (Int v = lo; v <= hi; ++v) {
    Rat cost = (Rat(v) - c[depth]) * (Rat(v) - c[depth]);
    if (cost > budget) continue;
    z[depth] = Rat(v);
    enumerate_coset(c, glue_shift, radius_sq, global_reach, depth + 1, partial + v, z,
                    budget - cost, out);
  }
}

}  // namespace

std::vector<RatVec> lattice_points_in_ball(int d, const RatVec& center, const Rat& radius_sq) {
  if (d < 0) throw DomainError("lattice_points_in_ball: need d >= 0");
  if (static_cast<int>(center.size()) != d + 1)
    throw DomainError("lattice_points_in_ball: center must have d+1 coordinates");
  if (!is_sum_zero(center)) throw DomainError("lattice_points_in_ball: center must sum to zero");
  if (radius_sq < 0) return {};

  std::vector<RatVec> out;
  if (d == 0) {
    if (norm_sq(center) <= radius_sq) out.push_back(RatVec{Rat(0)});
    return out;
  }

  RatVec glue(d + 1, Rat(-1, d + 1));
  glue[0] = Rat(d, d + 1);
  const Rat reach = sqrt_upper(radius_sq);

  RatVec shift(d + 1, Rat(0));
  for (int k = 0; k <= d; ++k) {
    RatVec c = vec_sub(center, shift);
    RatVec z(d + 1);
    enumerate_coset(c, shift, radius_sq, reach, 0, Int(0), z, radius_sq, out);
    shift = vec_add(shift, glue);
  }
  return out;
}

}  // namespace stix
