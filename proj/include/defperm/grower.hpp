#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "defperm/parallel.hpp"
#include "defperm/seeds.hpp"
#include "defperm/set_function.hpp"

namespace defperm {

struct Provenance {
  std::optional<std::pair<int, int>> parents;  // empty means axiom member
};

/// A named collection of indecomposable deformed permutahedra grown level by
/// level; verdict matrices are cached so re-verification can resume.
struct Family {
  int n = 0;
  std::vector<SetFunction> members;
  std::vector<Provenance> provenance;
  std::optional<std::vector<std::vector<bool>>> fertility;   // ordered pairs
  std::optional<std::vector<std::size_t>> defo_dims;
};

struct VerifyOptions {
  bool full = false;
  std::size_t sample_pairs = 10000;     // fertility sample when not full, n >= 6
  std::size_t sample_members = 100;     // certificate sample when not full, n >= 6
  std::uint64_t seed = 0x5eed;
  int jobs = 1;
  int max_n = 10;
};

struct VerifyFailure {
  std::string check;  // "deformed", "indecomposable", "normal-equivalence", "fertility"
  std::string witness;
};

struct FamilyReport {
  bool sampled = false;
  std::size_t members = 0;
  std::size_t pairs_checked = 0;
  std::size_t certificates_checked = 0;
  std::vector<VerifyFailure> failures;

  bool pass() const { return failures.empty(); }
};

/// Checks, over the whole family: (a) each member encodes a deformed
/// permutahedron (submodular + vertex round trip), (b) indecomposability
/// certificates, (c) pairwise normal inequivalence, (d) pairwise fertility in
/// both directions. At n >= 6 checks (a), (b), (d) are sampled unless full is
/// requested; (c) is always complete via tight-signature hashing.
inline FamilyReport verify_family(Family& fam, const VerifyOptions& opts = {}) {
  FamilyReport rep;
  const std::size_t m = fam.members.size();
  rep.members = m;
  rep.sampled = !opts.full && fam.n >= 6;
  std::mt19937_64 rng(opts.seed);

  // (a) submodularity is always checked; the vertex round trip is sampled.
  for (std::size_t i = 0; i < m; ++i)
    if (auto t = fam.members[i].first_violated_triple()) {
      std::ostringstream w;
      w << "member " << i << " violates triple (S=" << t->s << ", y=" << t->y + 1
        << ", z=" << t->z + 1 << ")";
      rep.failures.push_back({"deformed", w.str()});
    }
  if (!rep.failures.empty()) return rep;

  std::vector<std::size_t> member_sample;
  if (!rep.sampled) {
    for (std::size_t i = 0; i < m; ++i) member_sample.push_back(i);
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (std::size_t k = 0; k < std::min(opts.sample_members, m); ++k)
      member_sample.push_back(pick(rng));
  }

  for (std::size_t i : member_sample) {
    const SetFunction& f = fam.members[i];
    try {
      if (from_vertices(f.n(), VertexTable(f, opts.max_n).distinct(), opts.max_n) != f)
        rep.failures.push_back({"deformed", "member " + std::to_string(i) + " round trip"});
    } catch (const std::exception& e) {
      rep.failures.push_back({"deformed", "member " + std::to_string(i) + ": " + e.what()});
    }
  }

  // (b) rank certificates.
  std::vector<std::size_t> dims(m, 0);
  if (fam.defo_dims && fam.defo_dims->size() == m) {
    dims = *fam.defo_dims;
  } else {
    std::vector<std::size_t> computed(member_sample.size());
    parallel_for(member_sample.size(), opts.jobs, [&](std::size_t k) {
      computed[k] = defo_dim(fam.members[member_sample[k]]);
    });
    for (std::size_t k = 0; k < member_sample.size(); ++k) dims[member_sample[k]] = computed[k];
    if (!rep.sampled) fam.defo_dims = dims;
  }
  for (std::size_t i : member_sample) {
    ++rep.certificates_checked;
    if (dims[i] != static_cast<std::size_t>(fam.n) + 1)
      rep.failures.push_back({"indecomposable", "member " + std::to_string(i) + " has defo_dim " +
                                                    std::to_string(dims[i])});
  }

  // (c) pairwise normal inequivalence, complete via signature hashing.
  std::map<std::vector<bool>, std::size_t> sig_seen;
  for (std::size_t i = 0; i < m; ++i) {
    auto [it, fresh] = sig_seen.try_emplace(tight_signature(fam.members[i]), i);
    if (!fresh)
      rep.failures.push_back({"normal-equivalence", "members " + std::to_string(it->second) +
                                                        " and " + std::to_string(i)});
  }

  // (d) pairwise fertility, both directions.
  auto check_pair = [&](std::size_t i, std::size_t j) {
    ++rep.pairs_checked;
    if (!detail::fertile_fast(fam.members[i], fam.members[j]))
      rep.failures.push_back(
          {"fertility", "(" + std::to_string(i) + ", " + std::to_string(j) + ") infertile"});
  };
  if (!rep.sampled) {
    std::vector<std::vector<bool>> fert(m, std::vector<bool>(m, false));
    parallel_for(m, opts.jobs, [&](std::size_t i) {
      for (std::size_t j = 0; j < m; ++j)
        fert[i][j] = detail::fertile_fast(fam.members[i], fam.members[j]);
    });
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        ++rep.pairs_checked;
        if (!fert[i][j])
          rep.failures.push_back(
              {"fertility", "(" + std::to_string(i) + ", " + std::to_string(j) + ") infertile"});
      }
    fam.fertility = std::move(fert);
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (std::size_t k = 0; k < opts.sample_pairs; ++k) check_pair(pick(rng), pick(rng));
  }
  return rep;
}

/// One growth step: all m^2 ordered compositions at level n + 1, with
/// provenance, collision hard-error, and re-verification of the output.
inline Family grow_once(Family& fam, const VerifyOptions& opts = {}) {
  FamilyReport pre = verify_family(fam, opts);
  if (!pre.pass())
    throw std::domain_error("family verification failed: " + pre.failures.front().check + ": " +
                            pre.failures.front().witness);
  const std::size_t m = fam.members.size();
  Family next;
  next.n = fam.n + 1;
  const bool certify_all = next.n <= 5 || opts.full;
  std::vector<std::optional<ComposeResult>> composed(m * m);
  parallel_for(m * m, opts.jobs, [&](std::size_t k) {
    const std::size_t i = k / m, j = k % m;
    composed[k] = compose(fam.members[i], fam.members[j], certify_all);
  });
  std::map<std::vector<Rat>, std::size_t> canon_seen;
  for (std::size_t k = 0; k < m * m; ++k) {
    const std::size_t i = k / m, j = k % m;
    ComposeResult& c = *composed[k];
    auto [it, fresh] = canon_seen.try_emplace(canonical_ray_form(c.lifted).values(), k);
    if (!fresh) {
      std::ostringstream w;
      w << "composition (" << i << ", " << j << ") collides with (" << it->second / m << ", "
        << it->second % m << ")";
      throw std::logic_error(w.str());
    }
    next.members.push_back(std::move(c.lifted));
    next.provenance.push_back({std::pair{static_cast<int>(i), static_cast<int>(j)}});
  }
  if (certify_all) {
    std::vector<std::size_t> dims(m * m);
    for (std::size_t k = 0; k < m * m; ++k) dims[k] = composed[k]->certificate->defo_dim;
    next.defo_dims = std::move(dims);
  }
  FamilyReport post = verify_family(next, opts);
  if (!post.pass())
    throw std::logic_error("grown family failed verification: " + post.failures.front().check +
                           ": " + post.failures.front().witness);
  return next;
}

/// Greedy maximal clique in the mutual-fertility graph (both directions
/// fertile, not normally equivalent). Descending degree with index tie-break;
/// maximal under inclusion, not guaranteed maximum.
inline Family greedy_mutual_clique(const std::vector<SetFunction>& pool) {
  const std::size_t m = pool.size();
  Family fam;
  if (m == 0) return fam;
  fam.n = pool[0].n();
  for (const SetFunction& f : pool)
    if (!is_indecomposable(f).indecomposable)
      throw std::domain_error("clique pool must consist of indecomposables");
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      adj[i][j] = adj[j][i] = detail::fertile_fast(pool[i], pool[j]) &&
                              detail::fertile_fast(pool[j], pool[i]) &&
                              !is_normally_equivalent(pool[i], pool[j]);
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto deg = [&](std::size_t v) {
      return std::count(adj[v].begin(), adj[v].end(), true);
    };
    return deg(a) > deg(b);
  });
  std::vector<std::size_t> clique;
  for (std::size_t v : order) {
    bool ok = true;
    for (std::size_t u : clique)
      if (!adj[v][u]) ok = false;
    if (ok) clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  for (std::size_t v : clique) {
    fam.members.push_back(pool[v]);
    fam.provenance.push_back({});
  }
  return fam;
}

struct BoundReport {
  int k = 0;
  Int p = 0;
  int n = 0;
  Int family_bound;   // p^(2^(n-k))
  Int lower_double;   // 2^(2^(n-2))
  Int upper;          // n^(2^n)
  bool family_above_lower_double = false;
  bool family_below_upper = false;
  // Beyond the printable guard only these survive.
  double log2log2_family = 0;
  double log2log2_lower = 0;
  double log2log2_upper = 0;
  bool printable = true;
};

/// Exact big-integer evaluation of the count tower p^(2^(n-k)) against the
/// sandwich 2^(2^(n-2)) <= a_n <= t_n <= n^(2^n).
inline BoundReport bound_report(int k, const Int& p, int n) {
  if (p < 1) throw std::invalid_argument("family size must be >= 1");
  if (n < k) throw std::invalid_argument("target level below family level");
  if (n < 2) throw std::invalid_argument("target level must be >= 2");
  BoundReport rep;
  rep.k = k;
  rep.p = p;
  rep.n = n;
  rep.printable = n <= 12;
  const double lg_p = std::log2(p.convert_to<double>());
  rep.log2log2_family = (n - k) + std::log2(lg_p);
  rep.log2log2_lower = n - 2;
  rep.log2log2_upper = n + std::log2(std::log2(static_cast<double>(n)));
  if (!rep.printable) return rep;
  rep.family_bound = boost::multiprecision::pow(p, 1u << (n - k));
  rep.lower_double = boost::multiprecision::pow(Int(2), 1u << (n - 2));
  rep.upper = boost::multiprecision::pow(Int(n), 1u << n);
  rep.family_above_lower_double = rep.family_bound >= rep.lower_double;
  rep.family_below_upper = rep.family_bound <= rep.upper;
  return rep;
}

}  // namespace defperm
