#pragma once

// Brute-force reference implementations, written straight from the definitions
// and independent of the library's algorithms, for cross-checking.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "stix/lattice.hpp"
#include "stix/polytope.hpp"

namespace stix_test {

using stix::DecodeResult;
using stix::HPoly;
using stix::Rat;
using stix::RatVec;
using stix::VPoly;

// A*_d is the mean-centering image of Z^{d+1}: scan integer vectors m with each
// m_i within `reach` of round(x_i) and keep the closest centered image.
inline DecodeResult brute_nearest_dual(const RatVec& x, int reach = 2) {
  const int n = static_cast<int>(x.size());
  std::vector<long long> lo(n), idx(n, 0);
  for (int i = 0; i < n; ++i)
    lo[i] = stix::round_nearest(x[i]).convert_to<long long>() - reach;
  const int span = 2 * reach + 1;

  DecodeResult best;
  bool first = true;
  while (true) {
    Rat sum(0);
    for (int i = 0; i < n; ++i) sum += Rat(lo[i] + idx[i]);
    const Rat mean = sum / n;
    RatVec y(n);
    Rat d2(0);
    for (int i = 0; i < n; ++i) {
      y[i] = Rat(lo[i] + idx[i]) - mean;
      const Rat diff = y[i] - x[i];
      d2 += diff * diff;
    }
    if (first || d2 < best.sq_dist) best = {d2, y};
    first = false;
    int k = 0;
    while (k < n && ++idx[k] == span) idx[k++] = 0;
    if (k == n) break;
  }
  return best;
}

// Same scan for A_d (integer vectors with zero sum).
inline DecodeResult brute_nearest_a(const RatVec& x, int reach = 2) {
  const int n = static_cast<int>(x.size());
  std::vector<long long> lo(n), idx(n, 0);
  for (int i = 0; i < n; ++i)
    lo[i] = stix::round_nearest(x[i]).convert_to<long long>() - reach;
  const int span = 2 * reach + 1;

  DecodeResult best;
  bool first = true;
  while (true) {
    long long sum = 0;
    for (int i = 0; i < n; ++i) sum += lo[i] + idx[i];
    if (sum == 0) {
      RatVec y(n);
      Rat d2(0);
      for (int i = 0; i < n; ++i) {
        y[i] = Rat(lo[i] + idx[i]);
        const Rat diff = y[i] - x[i];
        d2 += diff * diff;
      }
      if (first || d2 < best.sq_dist) best = {d2, y};
      first = false;
    }
    int k = 0;
    while (k < n && ++idx[k] == span) idx[k++] = 0;
    if (k == n) break;
  }
  return best;
}

// Monte-Carlo volume from the vertex bounding box; returns (estimate, sigma).
inline std::pair<double, double> mc_volume(const HPoly& h, const VPoly& v, int samples,
                                           std::uint64_t seed) {
  const int d = h.dim;
  std::vector<double> lo(d, 1e300), hi(d, -1e300);
  for (const RatVec& p : v.verts)
    for (int k = 0; k < d; ++k) {
      const double c = static_cast<double>(p[k]);
      lo[k] = std::min(lo[k], c);
      hi[k] = std::max(hi[k], c);
    }
  std::vector<std::vector<double>> normals;
  std::vector<double> rhs;
  for (const auto& c : h.cons) {
    std::vector<double> nd(d);
    for (int k = 0; k < d; ++k) nd[k] = static_cast<double>(c.normal[k]);
    normals.push_back(std::move(nd));
    rhs.push_back(static_cast<double>(c.rhs));
  }
  double box = 1;
  for (int k = 0; k < d; ++k) box *= hi[k] - lo[k];

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  long long inside = 0;
  std::vector<double> pt(d);
  for (int s = 0; s < samples; ++s) {
    for (int k = 0; k < d; ++k) pt[k] = lo[k] + unif(rng) * (hi[k] - lo[k]);
    bool ok = true;
    for (size_t c = 0; c < normals.size() && ok; ++c) {
      double dot = 0;
      for (int k = 0; k < d; ++k) dot += normals[c][k] * pt[k];
      ok = dot <= rhs[c] + 1e-12;
    }
    if (ok) ++inside;
  }
  const double p = static_cast<double>(inside) / samples;
  return {box * p, box * std::sqrt(p * (1 - p) / samples)};
}

inline Rat rand_rat(std::mt19937_64& rng, int range, int den_max) {
  std::uniform_int_distribution<int> dens(1, den_max);
  const int q = dens(rng);
  std::uniform_int_distribution<long long> nums(-static_cast<long long>(range) * q,
                                                static_cast<long long>(range) * q);
  return Rat(nums(rng), q);
}

// Random sum-zero vector with dim entries.
inline RatVec rand_sum_zero(std::mt19937_64& rng, int dim, int range = 3, int den_max = 8) {
  RatVec x(dim);
  for (int i = 0; i < dim; ++i) x[i] = rand_rat(rng, range, den_max);
  return stix::project_sum_zero(x);
}

// Random point with coordinates uniformly distributed mod 1 (gap 1/dim): a base
// offset plus a shuffled progression, mean-centered.
inline RatVec rand_uniform_mod_one(std::mt19937_64& rng, int dim) {
  std::vector<int> perm(dim);
  for (int i = 0; i < dim; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  const Rat base = rand_rat(rng, 2, 6);
  RatVec x(dim);
  for (int i = 0; i < dim; ++i) {
    // integer jitter keeps residues intact
    std::uniform_int_distribution<int> jit(-2, 2);
    x[i] = base + Rat(perm[i], dim) + jit(rng);
  }
  return stix::project_sum_zero(x);
}

}  // namespace stix_test
