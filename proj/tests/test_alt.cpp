#include <doctest.h>

#include <fstream>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "stix/altgrid.hpp"
#include "stix/errors.hpp"
#include "stix/json_io.hpp"

using namespace stix;
using namespace stix_test;

namespace {

// exact line-line distance via the 2x2 Gram system, minimized over a box of
// integer translates
Rat brute_pair_sq_dist(const DiagonalConfig& cfg, int i, int j, int reach = 2) {
  const int n = cfg.n;
  RatVec vi(n), vj(n);
  for (int k = 0; k < n; ++k) {
    vi[k] = Rat(cfg.directions[i][k]);
    vj[k] = Rat(cfg.directions[j][k]);
  }
  const Rat gii = norm_sq(vi), gjj = norm_sq(vj), gij = vec_dot(vi, vj);
  const Rat det = gii * gjj - gij * gij;
  REQUIRE(det != 0);

  Rat best;
  bool first = true;
  std::vector<int> idx(n, 0);
  const int span = 2 * reach + 1;
  while (true) {
    RatVec d = vec_sub(cfg.offsets[i], cfg.offsets[j]);
    for (int k = 0; k < n; ++k) d[k] -= Rat(idx[k] - reach);
    const Rat bi = vec_dot(d, vi), bj = vec_dot(d, vj);
    const Rat ti = (bi * gjj - bj * gij) / det;
    const Rat tj = (gii * bj - gij * bi) / det;
    const Rat sq = norm_sq(d) - ti * bi - tj * bj;
    if (first || sq < best) best = sq;
    first = false;
    int k = 0;
    while (k < n && ++idx[k] == span) idx[k++] = 0;
    if (k == n) break;
  }
  return best;
}

DiagonalConfig random_config(int n, std::mt19937_64& rng) {
  DiagonalConfig cfg;
  cfg.n = n;
  cfg.directions = diagonal_directions(n);
  for (size_t i = 0; i < cfg.directions.size(); ++i) {
    RatVec u(n);
    for (int k = 0; k < n; ++k) u[k] = Rat(static_cast<int>(rng() % 9) - 4, 8);
    cfg.offsets.push_back(u);
  }
  return cfg;
}

}  // namespace

TEST_CASE("diagonal direction generation") {
  for (int n : {3, 4, 5}) {
    const auto dirs = diagonal_directions(n);
    CHECK(dirs.size() == (size_t{1} << (n - 1)));
    std::set<std::vector<int>> dedup(dirs.begin(), dirs.end());
    CHECK(dedup.size() == dirs.size());
    for (const auto& d : dirs) {
      REQUIRE(static_cast<int>(d.size()) == n);
      CHECK(d.back() == 1);
      for (int e : d) CHECK((e == 1 || e == -1));
    }
  }
  CHECK_THROWS_AS(diagonal_directions(1), DomainError);
}

TEST_CASE("closed-form offsets at n = 4") {
  const DiagonalConfig cfg = diagonal_config_n4();
  REQUIRE(cfg.n == 4);
  REQUIRE(cfg.directions.size() == 8);
  REQUIRE(cfg.directions[0] == std::vector<int>{1, 1, 1, 1});
  CHECK(cfg.offsets[0] == RatVec{Rat(1, 12), Rat(-1, 3), Rat(1, 4), Rat(0)});
  REQUIRE(cfg.directions[1] == std::vector<int>{-1, 1, 1, 1});
  CHECK(cfg.offsets[1] == RatVec{Rat(5, 12), Rat(-1, 3), Rat(-1, 4), Rat(0)});

  CHECK(diagonal_min_sq_dist(cfg) == Rat(5, 36));
  int attained = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      const Rat sq = diagonal_pair_sq_dist(cfg, i, j).sq_dist;
      CHECK(sq >= Rat(5, 36));
      if (sq == Rat(5, 36)) ++attained;
    }
  CHECK(attained > 0);
}

TEST_CASE("pair distances match the brute-force line oracle") {
  const DiagonalConfig cfg4 = diagonal_config_n4();
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      CHECK(diagonal_pair_sq_dist(cfg4, i, j).sq_dist == brute_pair_sq_dist(cfg4, i, j));

  std::mt19937_64 rng(8675309);
  for (int trial = 0; trial < 3; ++trial) {
    const DiagonalConfig cfg = random_config(3, rng);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        CHECK(diagonal_pair_sq_dist(cfg, i, j).sq_dist == brute_pair_sq_dist(cfg, i, j));
  }
  const DiagonalConfig cfg = random_config(4, rng);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      CHECK(diagonal_pair_sq_dist(cfg, i, j).sq_dist == brute_pair_sq_dist(cfg, i, j));
}

TEST_CASE("pair distance invariances") {
  std::mt19937_64 rng(1234);
  DiagonalConfig cfg = random_config(4, rng);
  const Rat before = diagonal_pair_sq_dist(cfg, 1, 5).sq_dist;

  DiagonalConfig shifted = cfg;
  shifted.offsets[1] = vec_add(shifted.offsets[1], RatVec{Rat(2), Rat(-1), Rat(3), Rat(0)});
  CHECK(diagonal_pair_sq_dist(shifted, 1, 5).sq_dist == before);

  DiagonalConfig slid = cfg;
  RatVec v(4);
  for (int k = 0; k < 4; ++k) v[k] = Rat(cfg.directions[1][k]);
  slid.offsets[1] = vec_add(slid.offsets[1], vec_scale(Rat(3, 7), v));
  CHECK(diagonal_pair_sq_dist(slid, 1, 5).sq_dist == before);
}

TEST_CASE("group witness reconstructs the distance") {
  const DiagonalConfig cfg = diagonal_config_n4();
  const DiagonalWitness w = diagonal_pair_sq_dist(cfg, 0, 3);
  CHECK(w.i == 0);
  CHECK(w.j == 3);
  CHECK(w.agree.size() + w.disagree.size() == 4);
  CHECK(w.sq_dist >= Rat(5, 36));
}

TEST_CASE("search is deterministic and self-verifying") {
  const DiagonalSearchResult a = diagonal_search(4, 7, 2000);
  const DiagonalSearchResult b = diagonal_search(4, 7, 2000);
  CHECK(a.score == b.score);
  CHECK(a.config.offsets == b.config.offsets);
  CHECK(a.score == diagonal_min_sq_dist(a.config));
  CHECK(a.score >= Rat(0));

  const DiagonalSearchResult zero = diagonal_search(3, 1, 0);
  CHECK(zero.score == diagonal_min_sq_dist(zero.config));
}

TEST_CASE("search offsets are half-integer with a pinned first family") {
  const DiagonalSearchResult r = diagonal_search(4, 3, 500);
  CHECK(r.config.offsets[0] == RatVec(4, Rat(0)));
  for (const RatVec& u : r.config.offsets)
    for (const Rat& c : u) CHECK((c == Rat(0) || c == Rat(1, 2)));
}

TEST_CASE("stored configurations attain the recorded scores") {
  const std::pair<int, Rat> targets[] = {
      {5, Rat(1, 6)}, {6, Rat(1, 6)}, {7, Rat(3, 16)}, {8, Rat(3, 16)}};
  for (const auto& [n, target] : targets) {
    std::ifstream f(std::string(STIX_FIXTURE_DIR) + "/diag_n" + std::to_string(n) + ".json");
    REQUIRE(f.is_open());
    Json doc;
    f >> doc;
    const DiagonalConfig cfg = diagonal_config_from_json(doc.at("exact").at("config"));
    CHECK(cfg.n == n);
    CHECK(diagonal_min_sq_dist(cfg) >= target);
  }
}

TEST_CASE("config serialization round trip") {
  const DiagonalConfig cfg = diagonal_config_n4();
  const Json j = diagonal_config_to_json(cfg);
  const DiagonalConfig back = diagonal_config_from_json(j);
  CHECK(back.n == cfg.n);
  CHECK(back.directions == cfg.directions);
  CHECK(back.offsets == cfg.offsets);

  Json bad = j;
  bad["directions"][0][0] = 2;
  CHECK_THROWS_AS(diagonal_config_from_json(bad), DomainError);
}
