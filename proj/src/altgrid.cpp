#include "stix/altgrid.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "stix/lattice.hpp"

namespace stix {

std::vector<std::vector<int>> diagonal_directions(int n) {
  if (n < 2 || n > 16) throw DomainError("diagonal_directions: need 2 <= n <= 16");
  const int count = 1 << (n - 1);
  std::vector<std::vector<int>> dirs(count, std::vector<int>(n, 1));
  for (int i = 0; i < count; ++i)
    for (int k = 0; k < n - 1; ++k)
      if (i >> k & 1) dirs[i][k] = -1;
  return dirs;
}

namespace {

void validate_config(const DiagonalConfig& cfg, const char* who) {
  const size_t count = cfg.directions.size();
  if (count < 2 || cfg.offsets.size() != count)
    throw DomainError(std::string(who) + ": directions/offsets size mismatch");
  for (size_t i = 0; i < count; ++i)
    if (static_cast<int>(cfg.directions[i].size()) != cfg.n ||
        static_cast<int>(cfg.offsets[i].size()) != cfg.n)
      throw DomainError(std::string(who) + ": entry dimension mismatch");
}

Rat group_sq_dist(const RatVec& w) {
  if (w.size() <= 1) return Rat(0);
  return nearest_lattice_point(project_sum_zero(w),
                               {LatticeFamily::AStar, static_cast<int>(w.size()) - 1})
      .sq_dist;
}

}  // namespace

DiagonalWitness diagonal_pair_sq_dist(const DiagonalConfig& cfg, int i, int j) {
  validate_config(cfg, "diagonal_pair_sq_dist");
  const int count = static_cast<int>(cfg.directions.size());
  if (i == j || i < 0 || j < 0 || i >= count || j >= count)
    throw DomainError("diagonal_pair_sq_dist: need two distinct family indices");
  DiagonalWitness out;
  out.i = i;
  out.j = j;
  for (int k = 0; k < cfg.n; ++k) {
    Rat wk = Rat(cfg.directions[i][k]) * (cfg.offsets[i][k] - cfg.offsets[j][k]);
    if (cfg.directions[i][k] == cfg.directions[j][k])
      out.agree.push_back(std::move(wk));
    else
      out.disagree.push_back(std::move(wk));
  }
  out.sq_dist = group_sq_dist(out.agree) + group_sq_dist(out.disagree);
  return out;
}

Rat diagonal_min_sq_dist(const DiagonalConfig& cfg) {
  validate_config(cfg, "diagonal_min_sq_dist");
  const int count = static_cast<int>(cfg.directions.size());
  Rat best;
  bool have = false;
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      Rat d = diagonal_pair_sq_dist(cfg, i, j).sq_dist;
      if (!have || d < best) {
        best = std::move(d);
        have = true;
      }
    }
  }
  return best;
}

DiagonalConfig diagonal_config_n4() {
  DiagonalConfig cfg;
  cfg.n = 4;
  cfg.directions = diagonal_directions(4);
  for (const std::vector<int>& v : cfg.directions) {
    RatVec u(4);
    u[0] = Rat(v[1], 4) - Rat(v[0], 6);
    u[1] = Rat(-v[1]) * Rat(3 * v[2] + 1, 12);
    u[2] = Rat(v[0], 4);
    u[3] = 0;
    cfg.offsets.push_back(std::move(u));
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// Search. Offsets are half-integer, so a pair's squared distance only depends
// on which offset coordinates differ: flipping the sign of a 1/2 entry is a
// lattice translation of the mean-centered witness, and coordinate order is a
// lattice symmetry. That reduces each pair to a table lookup f(group size,
// differing count), with the table built once through the exact decoder.
// ---------------------------------------------------------------------------

DiagonalSearchResult diagonal_search(int n, std::uint64_t seed, std::uint64_t budget) {
  if (n < 3 || n > 10) throw DomainError("diagonal_search: need 3 <= n <= 10");
  const int m = 1 << (n - 1);
  const std::uint32_t full = (1u << n) - 1;

  std::vector<std::vector<Rat>> f(n + 1);
  for (int mm = 0; mm <= n; ++mm) {
    f[mm].resize(mm + 1, Rat(0));
    if (mm <= 1) continue;
    for (int t = 0; t <= mm; ++t) {
      RatVec w(mm, Rat(0));
      for (int k = 0; k < t; ++k) w[k] = Rat(1, 2);
      f[mm][t] = group_sq_dist(w);
    }
  }
  Int denom = 1;
  for (const auto& row : f)
    for (const Rat& x : row) denom = boost::multiprecision::lcm(denom, rat_den(x));
  const long long scale = denom.convert_to<long long>();
  std::vector<std::vector<long long>> fi(n + 1);
  for (int mm = 0; mm <= n; ++mm) {
    fi[mm].resize(mm + 1);
    for (int t = 0; t <= mm; ++t)
      fi[mm][t] = (rat_num(f[mm][t]) * (denom / rat_den(f[mm][t]))).convert_to<long long>();
  }

  auto pair_score = [&](int i, int j, std::uint32_t oi, std::uint32_t oj) -> long long {
    const std::uint32_t dmask = static_cast<std::uint32_t>(i ^ j);
    const std::uint32_t xm = oi ^ oj;
    const int n2 = std::popcount(dmask);
    const int t2 = std::popcount(xm & dmask);
    const int t1 = std::popcount(xm & ~dmask & full);
    return fi[n - n2][t1] + fi[n2][t2];
  };

  std::vector<std::uint32_t> off(m, 0);
  std::vector<long long> ps(static_cast<size_t>(m) * m, 0);
  auto at = [m](int i, int j) { return static_cast<size_t>(i) * m + j; };

  auto fill_scores = [&]() -> long long {
    long long mn = -1;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        long long s = pair_score(i, j, off[i], off[j]);
        ps[at(i, j)] = s;
        if (mn < 0 || s < mn) mn = s;
      }
    return mn;
  };
  auto scan_min = [&]() -> long long {
    long long mn = -1;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (mn < 0 || ps[at(i, j)] < mn) mn = ps[at(i, j)];
    return mn;
  };

  std::mt19937_64 gen(seed);
  auto init_state = [&](int restart) {
    off.assign(m, 0);
    if (restart % 2 == 0) {
      // random linear map from direction bits to offset bits
      std::vector<std::uint32_t> rows(n);
      for (int r = 0; r < n; ++r) rows[r] = static_cast<std::uint32_t>(gen()) & ((1u << (n - 1)) - 1);
      for (int i = 1; i < m; ++i) {
        std::uint32_t o = 0;
        for (int r = 0; r < n; ++r)
          if (std::popcount(rows[r] & static_cast<std::uint32_t>(i)) & 1) o |= 1u << r;
        off[i] = o;
      }
    } else {
      for (int i = 1; i < m; ++i) off[i] = static_cast<std::uint32_t>(gen()) & full;
    }
  };

  const std::uint64_t patience = 2000;
  int restart = 0;
  init_state(restart);
  long long cur = fill_scores();
  std::vector<std::uint32_t> best_off = off;
  long long best = cur;

  std::uint64_t evals = 0;
  std::uint64_t stagnant = 0;
  while (evals < budget) {
    if (stagnant > patience) {
      init_state(++restart);
      cur = fill_scores();
      ++evals;
      stagnant = 0;
      if (cur > best) {
        best = cur;
        best_off = off;
      }
      continue;
    }
    const int i = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(m - 1));
    const int k = static_cast<int>(gen() % static_cast<std::uint64_t>(n));
    off[i] ^= 1u << k;
    std::vector<std::pair<size_t, long long>> saved;
    saved.reserve(m - 1);
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      const size_t pos = j < i ? at(j, i) : at(i, j);
      saved.emplace_back(pos, ps[pos]);
      ps[pos] = j < i ? pair_score(j, i, off[j], off[i]) : pair_score(i, j, off[i], off[j]);
    }
    const long long mn = scan_min();
    ++evals;
    ++stagnant;
    const bool accept = mn > cur || (mn == cur && (gen() & 1));
    if (accept) {
      if (mn > cur) stagnant = 0;
      cur = mn;
      if (cur > best) {
        best = cur;
        best_off = off;
      }
    } else {
      off[i] ^= 1u << k;
      for (const auto& [pos, val] : saved) ps[pos] = val;
    }
  }

  DiagonalConfig cfg;
  cfg.n = n;
  cfg.directions = diagonal_directions(n);
  for (int i = 0; i < m; ++i) {
    RatVec u(n, Rat(0));
    for (int k = 0; k < n; ++k)
      if (best_off[i] >> k & 1) u[k] = Rat(1, 2);
    cfg.offsets.push_back(std::move(u));
  }

  DiagonalSearchResult res;
  res.config = std::move(cfg);
  res.score = diagonal_min_sq_dist(res.config);
  res.seed = seed;
  res.budget = budget;
  if (res.score != Rat(best, scale))
    throw std::logic_error("diagonal_search: fast scorer disagrees with exact path");
  return res;
}

}  // namespace stix
