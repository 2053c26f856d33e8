// Acceptance suite, fast half: one line of output per criterion.

#include <algorithm>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "defperm/grower.hpp"
#include "defperm/io.hpp"
#include "defperm/raycone.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace defperm;
using fixtures::pt;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << name;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

bool check(bool cond, const std::string& msg, std::string& detail) {
  if (!cond && detail.empty()) detail = msg;
  return cond;
}

std::vector<Point> sorted_vertices(const SetFunction& f) {
  auto v = VertexTable(f).distinct();
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

int main() {
  criterion(1, "ray counts 1 / 5 / 37 for n = 2, 3, 4", [](std::string& d) {
    bool ok = true;
    const std::size_t expected[] = {1, 5, 37};
    for (int n = 2; n <= 4; ++n) {
      const std::size_t got = enumerate_rays(sc_facets(n)).rays.size();
      ok &= check(got == expected[n - 2],
                  "n=" + std::to_string(n) + " gave " + std::to_string(got), d);
    }
    return ok;
  });

  criterion(2, "facet counts C(n,2) 2^(n-2) for n = 2..6", [](std::string& d) {
    bool ok = true;
    const std::size_t expected[] = {1, 6, 24, 80, 240};
    for (int n = 2; n <= 6; ++n)
      ok &= check(sc_facets(n).triples.size() == expected[n - 2], "n=" + std::to_string(n), d);
    return ok;
  });

  criterion(3, "n = 3 corpus: certificates, digraph, phi table, minimal seeds", [](std::string& d) {
    const auto c = fixtures::corpus3();
    bool ok = true;
    for (const SetFunction& p : c) {
      const RayCertificate cert = is_indecomposable(p);
      ok &= check(cert.indecomposable && cert.defo_dim == 4, "certificate", d);
    }
    ok &= check(fertility_graph(c) == fixtures::fertility_digraph3(), "digraph", d);
    const std::vector<std::pair<std::pair<int, int>, Point>> table = {
        {{0, 3}, pt({0, -1, -1})}, {{1, 3}, pt({-1, 0, -1})}, {{2, 3}, pt({0, -1, -1})},
        {{4, 0}, pt({-1, 0, -1})}, {{4, 1}, pt({-1, -1, 0})}, {{4, 2}, pt({-1, -1, 0})},
        {{4, 3}, pt({-1, -1, -1})}};
    for (const auto& [pair, expected] : table) {
      ok &= check(phi(c[pair.first], c[pair.second], 1, 1) == expected, "phi entry", d);
      ok &= check(min_seed(c[pair.first], c[pair.second]) == std::pair{Rat(1), Rat(1)},
                  "lambda", d);
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      ok &= check(phi(c[i], c[i], 1, 1) == pt({0, 0, 0}), "phi diagonal", d);
      ok &= check(min_seed(c[i], c[i]) == std::pair{Rat(1), Rat(1)}, "diagonal seed", d);
    }
    return ok;
  });

  criterion(4, "composition fixtures: square pyramid and octahedron", [](std::string& d) {
    auto pyramid = fixtures::square_pyramid_vertices();
    auto octahedron = fixtures::octahedron_vertices();
    std::sort(pyramid.begin(), pyramid.end());
    std::sort(octahedron.begin(), octahedron.end());
    bool ok = check(sorted_vertices(compose(fixtures::s1(), fixtures::t1()).lifted) == pyramid,
                    "pyramid", d);
    ok &= check(sorted_vertices(compose(fixtures::t2(), fixtures::t1()).lifted) == octahedron,
                "octahedron", d);
    return ok;
  });

  criterion(5, "the 11-member family verifies and sits among the 37 rays", [](std::string& d) {
    Family fam;
    fam.n = 4;
    fam.members = fixtures::family11();
    fam.provenance.assign(11, {});
    const FamilyReport rep = verify_family(fam);
    bool ok = check(rep.pass() && !rep.sampled && rep.pairs_checked == 121, "verification", d);
    if (!rep.pass()) d = rep.failures.front().check + ": " + rep.failures.front().witness;
    const ConeH h = sc_facets(4);
    const RaySet rays = enumerate_rays(h);
    std::set<std::size_t> hit;
    for (const CrossCheckEntry& e : cross_check(h, fam.members, rays)) {
      ok &= check(e.ray_index.has_value(), "member off the ray list", d);
      if (e.ray_index) hit.insert(*e.ray_index);
    }
    ok &= check(hit.size() == 11, "distinct rays", d);
    return ok;
  });

  criterion(7, "bound arithmetic for n = 5..12", [](std::string& d) {
    bool ok = true;
    ok &= check(bound_report(4, 11, 5).family_bound == 121, "11^2", d);
    ok &= check(bound_report(4, 11, 6).family_bound == 14641, "11^4", d);
    for (int n = 5; n <= 12; ++n) {
      const BoundReport weak = bound_report(4, 11, n);
      const BoundReport strong = bound_report(5, 656, n);
      ok &= check(weak.printable && strong.printable, "printable", d);
      ok &= check(weak.family_below_upper && strong.family_below_upper, "upper", d);
      ok &= check(strong.family_above_lower_double, "656 tower vs doubling", d);
      ok &= check(weak.lower_double <= weak.upper, "sandwich", d);
      ok &= check(boost::multiprecision::pow(Int(11), 1u << (n - 4)) == weak.family_bound,
                  "tower", d);
    }
    return ok;
  });

  criterion(8, "oracle and property suites", [](std::string& d) {
    std::mt19937_64 rng(0xacce97);
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
      const auto [p, q] = oracles::random_generic_pair(2 + trial % 2, rng);
      const GPolymatroid g = gp_sum(p, q);
      ok &= check(oracles::lift_vertices(g) == oracles::oracle_vertices(g), "vertex oracle", d);
      ok &= check(g.top_face() == p && g.bottom_face() == q, "face round trip", d);
      ok &= check(GPolymatroid::from_deformed(g.lifted()) == g, "proj after lift", d);
    }
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + trial % 3;
      const auto [p1, q1] = oracles::random_generic_pair(n, rng);
      const auto [p2, q2] = oracles::random_generic_pair(n, rng);
      ok &= check(gp_sum(p1.minkowski_sum(p2), q1.minkowski_sum(q2)).lifted() ==
                      gp_sum(p1, q1).lifted().minkowski_sum(gp_sum(p2, q2).lifted()),
                  "linearity", d);
    }
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 2 + trial % 3;
      const SetFunction p = gen::random_submodular(n, rng);
      const SetFunction q = gen::random_submodular(n, rng);
      ok &= check(independence_polytope(p.minkowski_sum(q)).lifted() ==
                      independence_polytope(p).lifted().minkowski_sum(
                          independence_polytope(q).lifted()),
                  "independence additivity", d);
    }
    const auto c = fixtures::corpus3();
    for (const SetFunction& p : c)
      for (const SetFunction& q : c)
        ok &= check(detail::fertile_fast(p, q) == is_fertile_by_envelope(p, q),
                    "fast vs envelope", d);
    std::vector<SetFunction> pool = c;
    for (const SetFunction& p : fixtures::family11()) pool.push_back(p);
    for (const SetFunction& p : pool)
      ok &= check(is_indecomposable(p).indecomposable ==
                      is_indecomposable(independence_polytope(p).lifted()).indecomposable,
                  "independence indecomposability", d);
    return ok;
  });

  std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures))
            << std::endl;
  return failures == 0 ? 0 : 1;
}
