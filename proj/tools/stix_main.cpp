// Command-line front end. Every subcommand prints one JSON document on stdout;
// all numbers inside it are exact "p/q" strings, with optional decimal mirrors
// under "approx" that are never fed back into any computation.
//
// Exit codes: 0 success, 2 invalid input domain, 3 convergence or internal
// failure.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "stix/altgrid.hpp"
#include "stix/coverage.hpp"
#include "stix/json_io.hpp"
#include "stix/lines.hpp"
#include "stix/version.hpp"

namespace {

using namespace stix;

void emit(const Json& doc, const std::string& json_out) {
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!json_out.empty()) {
    std::ofstream f(json_out);
    if (!f) throw DomainError("cannot open for writing: " + json_out);
    f << text;
  }
}

Rat parse_cap(const std::string& s) { return s.empty() ? Rat(0) : rat_parse(s); }

// 1-based --chart value to the 0-based dropped coordinate; 0 means default.
int chart_to_drop(int chart, int ambient_dim) {
  if (chart == 0) return -1;
  if (chart < 1 || chart > ambient_dim)
    throw DomainError("--chart must be between 1 and " + std::to_string(ambient_dim));
  return chart - 1;
}

Json approx_header() {
  Json a;
  a["note"] = "display only; the exact fields are authoritative";
  return a;
}

Json run_construct(int n) {
  const OffsetFamily fam = make_offset_family(n);
  const FieldTable f = field_make(n);
  const LogMatrix m = log_matrix(f);

  Json params;
  params["n"] = n;
  Json doc = manifest("construct", std::move(params));

  Json field;
  field["p"] = f.p;
  field["k"] = f.k;
  field["q"] = f.q;
  field["modulus_coeffs"] = f.modulus;
  field["alpha"] = f.element_name(f.alpha);
  Json elems = Json::array();
  for (int e : f.elems) elems.push_back(f.element_name(e));
  field["elements"] = std::move(elems);

  Rat min_sq;
  bool first = true;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Rat d = min_pair_sq_dist(fam, i, j).sq_dist;
      if (first || d < min_sq) min_sq = d;
      first = false;
    }

  Json exact;
  exact["field"] = std::move(field);
  exact["log_matrix"] = m.entry;
  exact["family"] = offset_family_to_json(fam);
  exact["min_pair_sq_dist"] = rat_to_json(min_sq);
  exact["optimal"] = is_optimal_family(fam);
  doc["exact"] = std::move(exact);

  Json approx = approx_header();
  approx["min_pair_sq_dist"] = rat_decimal(min_sq);
  doc["approx"] = std::move(approx);
  return doc;
}

Json run_distances(int n) {
  const OffsetFamily fam = make_offset_family(n);

  Json params;
  params["n"] = n;
  Json doc = manifest("distances", std::move(params));

  const Rat target = covering_sq_radius(n - 2);
  const Rat parallel = parallel_line_sq_dist(n);
  Rat min_sq;
  bool first = true;
  bool optimal = true;
  Json pairs = Json::array();
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const PairWitness w = min_pair_sq_dist(fam, i, j);
      Json one;
      one["i"] = i + 1;
      one["j"] = j + 1;
      one["sq_dist"] = rat_to_json(w.sq_dist);
      pairs.push_back(std::move(one));
      if (first || w.sq_dist < min_sq) min_sq = w.sq_dist;
      first = false;
      if (w.sq_dist != target) optimal = false;
    }

  Json exact;
  exact["pairs"] = std::move(pairs);
  exact["min_sq_dist"] = rat_to_json(min_sq);
  exact["target_sq_dist"] = rat_to_json(target);
  exact["parallel_sq_dist"] = rat_to_json(parallel);
  exact["optimal"] = optimal;
  doc["exact"] = std::move(exact);

  if (parallel < target) {
    const std::string warning =
        "parallel lines within one family are closer than distinct families: " +
        rat_str(parallel) + " < " + rat_str(target) +
        "; the transverse distances no longer govern the arrangement";
    doc["warning"] = warning;
    std::cerr << "warning: " << warning << "\n";
  }

  Json approx = approx_header();
  approx["min_sq_dist"] = rat_decimal(min_sq);
  approx["parallel_sq_dist"] = rat_decimal(parallel);
  doc["approx"] = std::move(approx);
  return doc;
}

Json run_coverage(int n, int chart, const std::string& cap_str) {
  const int drop = chart_to_drop(chart, n);
  const CoverageReport rep = coverage_fraction(n, drop, parse_cap(cap_str));

  Json params;
  params["n"] = n;
  if (chart != 0) params["chart"] = chart;
  if (!cap_str.empty()) params["radius_cap"] = cap_str;
  Json doc = manifest("coverage", std::move(params));

  Json exact;
  exact["fraction"] = rat_to_json(rep.fraction);
  exact["cell_volume"] = rat_to_json(rep.cell_volume);
  exact["lattice_volume"] = rat_to_json(rep.lattice_volume);
  exact["chart"] = rep.cell.chart.drop + 1;
  exact["radius_sq"] = rat_to_json(rep.cell.radius_sq);
  exact["cell"] = polytope_to_json(rep.cell.hrep, rep.cell.vrep);
  doc["exact"] = std::move(exact);

  Json approx = approx_header();
  approx["fraction"] = rat_decimal(rep.fraction);
  doc["approx"] = std::move(approx);
  return doc;
}

Json run_alt(int n, std::uint64_t seed, std::uint64_t budget, bool formula,
             const std::string& verify_path) {
  Json params;
  DiagonalConfig cfg;
  if (formula) {
    if (n != 0 && n != 4) throw DomainError("--formula is the closed form for n = 4 only");
    cfg = diagonal_config_n4();
    params["n"] = 4;
    params["formula"] = true;
  } else if (!verify_path.empty()) {
    std::ifstream f(verify_path);
    if (!f) throw DomainError("cannot open fixture: " + verify_path);
    Json j;
    try {
      f >> j;
    } catch (const Json::parse_error& e) {
      throw DomainError("fixture is not valid JSON: " + std::string(e.what()));
    }
    // accept either a bare config or a full document written with --json-out
    const Json& body =
        (j.contains("exact") && j.at("exact").contains("config")) ? j.at("exact").at("config") : j;
    cfg = diagonal_config_from_json(body);
    if (n != 0 && n != cfg.n)
      throw DomainError("fixture is for n = " + std::to_string(cfg.n) + ", not " +
                        std::to_string(n));
    params["n"] = cfg.n;
    params["verify"] = verify_path;
  } else {
    if (n == 0) throw DomainError("alt needs --n (or --formula / --verify)");
    const DiagonalSearchResult res = diagonal_search(n, seed, budget);
    cfg = res.config;
    params["n"] = n;
    params["seed"] = seed;
    params["budget"] = budget;
  }

  const Rat score = diagonal_min_sq_dist(cfg);
  Json doc = manifest("alt", std::move(params));
  Json exact;
  exact["score"] = rat_to_json(score);
  exact["config"] = diagonal_config_to_json(cfg);
  doc["exact"] = std::move(exact);

  Json approx = approx_header();
  approx["score"] = rat_decimal(score);
  doc["approx"] = std::move(approx);
  return doc;
}

Json run_export(const std::string& object, int n, int chart, const std::string& cap_str,
                const std::string& obj_out) {
  Cell cell;
  Json params;
  params["object"] = object;
  params["n"] = n;
  if (chart != 0) params["chart"] = chart;
  if (!cap_str.empty()) params["radius_cap"] = cap_str;

  if (object == "cell-v") {
    const OffsetFamily fam = make_offset_family(n);
    cell = cross_section_cell(fam, chart_to_drop(chart, n), parse_cap(cap_str));
  } else if (object == "std-cell") {
    if (n < 1) throw DomainError("std-cell needs --n >= 1");
    cell = lattice_cell(n, chart_to_drop(chart, n + 1), parse_cap(cap_str));
  } else {
    throw DomainError("unknown object '" + object + "' (expected cell-v or std-cell)");
  }

  Json doc = manifest("export", std::move(params));
  Json exact;
  exact["chart"] = cell.chart.drop + 1;
  exact["radius_sq"] = rat_to_json(cell.radius_sq);
  exact["cell"] = polytope_to_json(cell.hrep, cell.vrep);
  exact["facets"] = cell.hrep.cons.size();
  exact["vertices"] = cell.vrep.verts.size();
  exact["volume"] = rat_to_json(chart_volume(cell.hrep, cell.vrep));
  doc["exact"] = std::move(exact);

  Json approx = approx_header();
  approx["volume"] = rat_decimal(chart_volume(cell.hrep, cell.vrep));
  doc["approx"] = std::move(approx);

  if (!obj_out.empty()) {
    if (cell.hrep.dim != 3)
      throw DomainError("OBJ export needs a 3-dimensional cell; this one has dimension " +
                        std::to_string(cell.hrep.dim));
    std::ofstream f(obj_out);
    if (!f) throw DomainError("cannot open for writing: " + obj_out);
    write_obj(f, cell.hrep, cell.vrep);
  }
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hexastix-style line arrangements from the permutohedral lattice"};
  app.set_version_flag("--version", stix::kVersion);
  app.require_subcommand(1);

  int n = 0;
  int chart = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = 100000;
  bool formula = false;
  std::string verify_path, radius_cap, json_out, obj_out, object;

  CLI::App* construct = app.add_subcommand("construct", "field tables, log matrix and offsets");
  construct->add_option("--n", n, "number of coordinates minus one; prime power")->required();
  construct->add_option("--json-out", json_out, "also write the document here");

  CLI::App* distances = app.add_subcommand("distances", "all-pairs exact squared distances");
  distances->add_option("--n", n)->required();
  distances->add_option("--json-out", json_out);

  CLI::App* coverage = app.add_subcommand("coverage", "exact covered fraction of space");
  coverage->add_option("--n", n)->required();
  coverage->add_option("--chart", chart, "1-based coordinate to delete in the chart");
  coverage->add_option("--radius-cap", radius_cap, "abort if the search radius exceeds this");
  coverage->add_option("--json-out", json_out);

  CLI::App* alt = app.add_subcommand("alt", "diagonal-direction variant: search or verify");
  alt->add_option("--n", n);
  alt->add_option("--seed", seed, "search seed (default 1)");
  alt->add_option("--budget", budget, "candidate evaluations");
  alt->add_flag("--formula", formula, "closed-form offsets for n = 4");
  alt->add_option("--verify", verify_path, "score a stored configuration");
  alt->add_option("--json-out", json_out);

  CLI::App* exp = app.add_subcommand("export", "polytope JSON / OBJ export");
  exp->add_option("object", object, "cell-v or std-cell")->required();
  exp->add_option("--n", n)->required();
  exp->add_option("--chart", chart);
  exp->add_option("--radius-cap", radius_cap);
  exp->add_option("--json-out", json_out);
  exp->add_option("--obj-out", obj_out, "OBJ mesh path (3-dimensional cells only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) emit(run_construct(n), json_out);
    if (distances->parsed()) emit(run_distances(n), json_out);
    if (coverage->parsed()) emit(run_coverage(n, chart, radius_cap), json_out);
    if (alt->parsed()) emit(run_alt(n, seed, budget, formula, verify_path), json_out);
    if (exp->parsed()) emit(run_export(object, n, chart, radius_cap, obj_out), json_out);
  } catch (const stix::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const stix::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
