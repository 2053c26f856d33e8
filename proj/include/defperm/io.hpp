#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "defperm/grower.hpp"
#include "defperm/polymatroid.hpp"
#include "defperm/seeds.hpp"
#include "defperm/set_function.hpp"

namespace defperm {

using Json = nlohmann::ordered_json;

inline Json to_json(const SetFunction& f) {
  Json j;
  j["n"] = f.n();
  Json vals = Json::array();
  for (const Rat& v : f.values()) vals.push_back(to_string(v));
  j["values"] = std::move(vals);
  return j;
}

inline SetFunction set_function_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Rat> vals;
  for (const auto& s : j.at("values")) vals.push_back(parse_rat(s.get<std::string>()));
  return SetFunction(n, std::move(vals));
}

inline Json to_json(int n, const std::vector<Point>& pts) {
  Json j;
  j["n"] = n;
  Json verts = Json::array();
  for (const Point& p : pts) {
    Json row = Json::array();
    for (const Rat& x : p) row.push_back(to_string(x));
    verts.push_back(std::move(row));
  }
  j["vertices"] = std::move(verts);
  return j;
}

inline std::vector<Point> vertices_from_json(const Json& j) {
  std::vector<Point> pts;
  for (const auto& row : j.at("vertices")) {
    Point p;
    for (const auto& s : row) p.push_back(parse_rat(s.get<std::string>()));
    pts.push_back(std::move(p));
  }
  return pts;
}

/// Accepts either a set-function document ("values") or a polytope document
/// ("vertices", certified through from_vertices).
inline SetFunction load_polytope(const Json& j, int max_n = 10) {
  if (j.contains("values")) return set_function_from_json(j);
  if (j.contains("vertices"))
    return from_vertices(j.at("n").get<int>(), vertices_from_json(j), max_n);
  throw std::invalid_argument("document has neither values nor vertices");
}

inline Json to_json(const GPolymatroid& g) {
  Json j = to_json(g.lifted());
  j["kind"] = "gpolymatroid";
  return j;
}

inline Json to_json(const SeedReport& rep) {
  Json j;
  j["fertile"] = rep.fertile;
  if (rep.lambda_min) {
    j["lambda_min"] = to_string(*rep.lambda_min);
    j["mu"] = "1";
  }
  Json bps = Json::array();
  for (const auto& coord : rep.breakpoints) {
    Json row = Json::array();
    for (const Rat& b : coord) row.push_back(to_string(b));
    bps.push_back(std::move(row));
  }
  j["breakpoints"] = std::move(bps);
  j["witness_coordinates"] = rep.witness_coordinates;
  return j;
}

inline Json to_json(const Family& fam) {
  Json j;
  j["n"] = fam.n;
  Json members = Json::array();
  for (const SetFunction& f : fam.members) members.push_back(to_json(f));
  j["members"] = std::move(members);
  Json prov = Json::array();
  for (const Provenance& p : fam.provenance) {
    if (p.parents)
      prov.push_back(Json::array({p.parents->first, p.parents->second}));
    else
      prov.push_back("axiom");
  }
  j["provenance"] = std::move(prov);
  Json verdicts = Json::object();
  if (fam.defo_dims) verdicts["defo_dims"] = *fam.defo_dims;
  if (fam.fertility) verdicts["fertility"] = *fam.fertility;
  j["verdicts"] = std::move(verdicts);
  return j;
}

inline Family family_from_json(const Json& j, int max_n = 10) {
  Family fam;
  fam.n = j.at("n").get<int>();
  for (const auto& m : j.at("members")) fam.members.push_back(load_polytope(m, max_n));
  if (j.contains("provenance")) {
    for (const auto& p : j.at("provenance")) {
      if (p.is_array())
        fam.provenance.push_back({std::pair{p.at(0).get<int>(), p.at(1).get<int>()}});
      else
        fam.provenance.push_back({});
    }
  } else {
    fam.provenance.assign(fam.members.size(), {});
  }
  if (j.contains("verdicts")) {
    const Json& v = j.at("verdicts");
    if (v.contains("defo_dims")) fam.defo_dims = v.at("defo_dims").get<std::vector<std::size_t>>();
    if (v.contains("fertility"))
      fam.fertility = v.at("fertility").get<std::vector<std::vector<bool>>>();
  }
  return fam;
}

inline Json to_json(const FamilyReport& rep) {
  Json j;
  j["pass"] = rep.pass();
  j["sampled"] = rep.sampled;
  j["members"] = rep.members;
  j["pairs_checked"] = rep.pairs_checked;
  j["certificates_checked"] = rep.certificates_checked;
  Json fails = Json::array();
  for (const VerifyFailure& f : rep.failures)
    fails.push_back(Json{{"check", f.check}, {"witness", f.witness}});
  j["failures"] = std::move(fails);
  return j;
}

inline Json to_json(const BoundReport& rep) {
  Json j;
  j["k"] = rep.k;
  j["p"] = rep.p.str();
  j["n"] = rep.n;
  j["printable"] = rep.printable;
  if (rep.printable) {
    j["family_bound"] = rep.family_bound.str();
    j["lower_double_exponential"] = rep.lower_double.str();
    j["upper"] = rep.upper.str();
    j["family_above_lower"] = rep.family_above_lower_double;
    j["family_below_upper"] = rep.family_below_upper;
  }
  j["log2log2_family"] = rep.log2log2_family;
  j["log2log2_lower"] = rep.log2log2_lower;
  j["log2log2_upper"] = rep.log2log2_upper;
  return j;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return Json::parse(in);
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace defperm
