#include "stix/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>

#include "stix/version.hpp"

namespace stix {

Json rat_to_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw DomainError("rat_from_json: expected a \"p/q\" string");
  return rat_parse(j.get<std::string>());
}

Json vec_to_json(const RatVec& v) {
  Json out = Json::array();
  for (const Rat& x : v) out.push_back(rat_to_json(x));
  return out;
}

RatVec vec_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("vec_from_json: expected an array");
  RatVec out;
  out.reserve(j.size());
  for (const Json& x : j) out.push_back(rat_from_json(x));
  return out;
}

Json polytope_to_json(const HPoly& h, const VPoly& v) {
  Json out;
  out["dim"] = h.dim;
  Json hs = Json::array();
  for (const HalfSpace& c : h.cons) {
    Json one;
    one["normal"] = vec_to_json(c.normal);
    one["rhs"] = rat_to_json(c.rhs);
    hs.push_back(std::move(one));
  }
  out["halfspaces"] = std::move(hs);
  Json vs = Json::array();
  for (const RatVec& x : v.verts) vs.push_back(vec_to_json(x));
  out["vertices"] = std::move(vs);
  return out;
}

std::pair<HPoly, VPoly> polytope_from_json(const Json& j) {
  if (!j.contains("dim") || !j.contains("halfspaces") || !j.contains("vertices"))
    throw DomainError("polytope_from_json: missing dim/halfspaces/vertices");
  const int dim = j.at("dim").get<int>();
  HPoly h{dim, {}};
  for (const Json& one : j.at("halfspaces"))
    h.cons.push_back({vec_from_json(one.at("normal")), rat_from_json(one.at("rhs"))});
  VPoly v{dim, {}};
  for (const Json& x : j.at("vertices")) v.verts.push_back(vec_from_json(x));
  return {std::move(h), std::move(v)};
}

Json diagonal_config_to_json(const DiagonalConfig& cfg) {
  Json out;
  out["n"] = cfg.n;
  Json dirs = Json::array();
  for (const std::vector<int>& d : cfg.directions) dirs.push_back(d);
  out["directions"] = std::move(dirs);
  Json offs = Json::array();
  for (const RatVec& u : cfg.offsets) offs.push_back(vec_to_json(u));
  out["offsets"] = std::move(offs);
  return out;
}

DiagonalConfig diagonal_config_from_json(const Json& j) {
  DiagonalConfig cfg;
  cfg.n = j.at("n").get<int>();
  if (cfg.n < 2 || cfg.n > 16) throw DomainError("diagonal config: n out of range");
  for (const Json& d : j.at("directions")) cfg.directions.push_back(d.get<std::vector<int>>());
  for (const Json& u : j.at("offsets")) cfg.offsets.push_back(vec_from_json(u));
  const size_t expect = size_t{1} << (cfg.n - 1);
  if (cfg.directions.size() != expect)
    throw DomainError("diagonal config: expected 2^(n-1) directions");
  if (cfg.offsets.size() != cfg.directions.size())
    throw DomainError("diagonal config: offsets count mismatch");
  std::set<std::vector<int>> seen;
  for (const std::vector<int>& d : cfg.directions) {
    if (static_cast<int>(d.size()) != cfg.n) throw DomainError("diagonal config: direction dimension");
    for (int e : d)
      if (e != 1 && e != -1) throw DomainError("diagonal config: direction entries must be +-1");
    if (d.back() != 1) throw DomainError("diagonal config: last direction entry must be +1");
    if (!seen.insert(d).second) throw DomainError("diagonal config: duplicate direction");
  }
  for (const RatVec& u : cfg.offsets)
    if (static_cast<int>(u.size()) != cfg.n) throw DomainError("diagonal config: offset dimension");
  return cfg;
}

Json offset_family_to_json(const OffsetFamily& fam) {
  Json out;
  out["n"] = fam.n;
  Json us = Json::array();
  for (const RatVec& u : fam.u) us.push_back(vec_to_json(u));
  out["offsets"] = std::move(us);
  Json vs = Json::array();
  for (const RatVec& v : fam.v) vs.push_back(vec_to_json(v));
  out["directions"] = std::move(vs);
  return out;
}

Json manifest(const std::string& command, Json parameters) {
  Json out;
  out["command"] = command;
  out["version"] = kVersion;
  out["parameters"] = std::move(parameters);
  return out;
}

void write_obj(std::ostream& os, const HPoly& h, const VPoly& v) {
  if (h.dim != 3 || v.dim != 3) throw DomainError("write_obj: only 3-dimensional cells");
  os << "# polytope export, " << v.verts.size() << " vertices, " << h.cons.size() << " faces\n";
  std::vector<std::array<double, 3>> pts;
  pts.reserve(v.verts.size());
  for (const RatVec& x : v.verts) {
    std::array<double, 3> p{};
    for (int k = 0; k < 3; ++k) p[k] = static_cast<double>(x[k]);
    os << "v " << p[0] << " " << p[1] << " " << p[2] << "\n";
    pts.push_back(p);
  }
  for (const HalfSpace& hs : h.cons) {
    std::vector<int> active;
    for (int i = 0; i < static_cast<int>(v.verts.size()); ++i)
      if (vec_dot(hs.normal, v.verts[i]) == hs.rhs) active.push_back(i);
    if (active.size() < 3) continue;
    std::array<double, 3> nrm{};
    for (int k = 0; k < 3; ++k) nrm[k] = static_cast<double>(hs.normal[k]);
    std::array<double, 3> c{0, 0, 0};
    for (int i : active)
      for (int k = 0; k < 3; ++k) c[k] += pts[i][k] / active.size();
    auto sub = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
      return std::array<double, 3>{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    };
    auto cross = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
      return std::array<double, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                   a[0] * b[1] - a[1] * b[0]};
    };
    auto dot = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
      return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    // in-plane frame (e1, e2) with e2 = normal x e1: sorting by atan2 walks the
    // polygon counterclockwise as seen from outside
    std::array<double, 3> e1 = sub(pts[active[0]], c);
    std::array<double, 3> e2 = cross(nrm, e1);
    std::sort(active.begin(), active.end(), [&](int a, int b) {
      const std::array<double, 3> ra = sub(pts[a], c);
      const std::array<double, 3> rb = sub(pts[b], c);
      return std::atan2(dot(ra, e2), dot(ra, e1)) < std::atan2(dot(rb, e2), dot(rb, e1));
    });
    os << "f";
    for (int i : active) os << " " << i + 1;
    os << "\n";
  }
}

}  // namespace stix
