#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "defperm/matrix.hpp"
#include "defperm/set_function.hpp"

namespace defperm {

/// H-description of the submodular cone modulo its lineality: coordinates are
/// g(X) for |X| >= 2 (singletons pinned to 0), one facet normal per triple.
struct ConeH {
  int n = 0;
  std::size_t dim = 0;                  // 2^n - n - 1
  std::vector<Subset> coords;           // subsets with |X| >= 2, ascending bitmask
  std::vector<TightTriple> triples;     // facet order matches normals
  std::vector<std::vector<Int>> normals;
};

inline ConeH sc_facets(int n) {
  if (n < 2 || n > 6) throw std::domain_error("sc_facets: n out of range [2, 6]");
  ConeH h;
  h.n = n;
  const Subset full = (Subset{1} << n) - 1;
  std::map<Subset, std::size_t> col;
  for (Subset s = 1; s <= full; ++s)
    if (std::popcount(s) >= 2) {
      col[s] = h.coords.size();
      h.coords.push_back(s);
    }
  h.dim = h.coords.size();
  h.triples = all_triples(n);
  for (const TightTriple& t : h.triples) {
    std::vector<Int> a(h.dim);
    const Subset by = Subset{1} << t.y, bz = Subset{1} << t.z;
    auto add = [&](Subset s, int c) {
      if (std::popcount(s) >= 2) a[col[s]] += c;
    };
    add(t.s | by, +1);
    add(t.s | bz, +1);
    add(t.s, -1);
    add(t.s | by | bz, -1);
    h.normals.push_back(std::move(a));
  }
  return h;
}

struct RaySet {
  int n = 0;
  std::size_t dim = 0;
  std::vector<std::vector<Int>> rays;  // primitive integer vectors, lex sorted
};

namespace detail {

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
  return acc;
}

inline void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
}

using IncidenceBits = std::vector<std::uint64_t>;

inline IncidenceBits incidence(const std::vector<Int>& ray,
                               const std::vector<std::vector<Int>>& normals,
                               const std::vector<std::size_t>& processed) {
  IncidenceBits bits((normals.size() + 63) / 64);
  for (std::size_t f : processed)
    if (dot(normals[f], ray) == 0) bits[f / 64] |= std::uint64_t{1} << (f % 64);
  return bits;
}

inline std::size_t popcount_and(const IncidenceBits& a, const IncidenceBits& b) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

}  // namespace detail

struct EnumerateOptions {
  bool long_run = false;                      // required for n = 5
  std::string checkpoint_path;                // checkpoint every 10 facets when set
  std::function<void(std::size_t, std::size_t, std::size_t)> progress;  // done, total, rays
};

/// Incremental double description over exact rationals. Rays of the pinned
/// cone are primitive integer vectors; adjacency is decided by the rank of
/// the common tight facet normals.
inline RaySet enumerate_rays(const ConeH& h, const EnumerateOptions& opts = {}) {
  if (h.dim > 26) throw std::domain_error("ambient dimension exceeds guard");
  if (h.n >= 5 && !opts.long_run) throw std::domain_error("n = 5 requires the long-run flag");

  // Initial simplicial cone from dim facets with linearly independent normals.
  std::vector<std::size_t> basis;
  {
    RatMatrix m(0, 0);
    std::size_t cur_rank = 0;
    for (std::size_t f = 0; f < h.normals.size() && basis.size() < h.dim; ++f) {
      std::vector<Rat> row(h.dim);
      for (std::size_t j = 0; j < h.dim; ++j) row[j] = Rat(h.normals[f][j]);
      RatMatrix probe = m;
      probe.append_row(row);
      if (rank(probe) > cur_rank) {
        m = std::move(probe);
        ++cur_rank;
        basis.push_back(f);
      }
    }
    if (basis.size() != h.dim) throw std::logic_error("facet normals do not span");
  }

  // Rays of the initial cone: columns of the inverse of the basis matrix.
  std::vector<std::vector<Int>> rays;
  {
    RatMatrix a(h.dim, h.dim);
    for (std::size_t r = 0; r < h.dim; ++r)
      for (std::size_t c = 0; c < h.dim; ++c) a.at(r, c) = Rat(h.normals[basis[r]][c]);
    for (std::size_t j = 0; j < h.dim; ++j) {
      std::vector<Rat> e(h.dim), x;
      e[j] = 1;
      if (!solve_square(a, e, x)) throw std::logic_error("basis not invertible");
      std::vector<Int> prim = primitive_integer_form(x);
      rays.push_back(std::move(prim));
    }
  }

  std::vector<std::size_t> processed(basis);
  std::vector<bool> done(h.normals.size(), false);
  for (std::size_t f : basis) done[f] = true;
  std::vector<detail::IncidenceBits> inc;
  for (const auto& r : rays) inc.push_back(detail::incidence(r, h.normals, processed));

  std::size_t steps_done = 0;
  while (processed.size() < h.normals.size()) {
    // Next facet: fewest incident current rays, lexicographic triple tie-break.
    std::size_t pick = h.normals.size();
    std::size_t pick_count = 0;
    for (std::size_t f = 0; f < h.normals.size(); ++f) {
      if (done[f]) continue;
      std::size_t cnt = 0;
      for (const auto& r : rays)
        if (detail::dot(h.normals[f], r) == 0) ++cnt;
      if (pick == h.normals.size() || cnt < pick_count ||
          (cnt == pick_count && h.triples[f] < h.triples[pick])) {
        pick = f;
        pick_count = cnt;
      }
    }

    const std::vector<Int>& a = h.normals[pick];
    std::vector<Int> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = detail::dot(a, rays[r]);
      if (val[r] > 0) pos.push_back(r);
      if (val[r] < 0) neg.push_back(r);
    }

    std::vector<std::vector<Int>> created;
    for (std::size_t rp : pos)
      for (std::size_t rn : neg) {
        const std::size_t common = detail::popcount_and(inc[rp], inc[rn]);
        if (common + 2 < h.dim) continue;
        // Algebraic adjacency: the common tight normals must have rank dim - 2.
        RatMatrix m(0, 0);
        for (std::size_t f : processed)
          if (inc[rp][f / 64] & inc[rn][f / 64] & (std::uint64_t{1} << (f % 64))) {
            std::vector<Rat> row(h.dim);
            for (std::size_t j = 0; j < h.dim; ++j) row[j] = Rat(h.normals[f][j]);
            m.append_row(std::move(row));
          }
        if (m.rows() == 0 || rank(m) != h.dim - 2) continue;
        std::vector<Int> nr(h.dim);
        for (std::size_t j = 0; j < h.dim; ++j)
          nr[j] = val[rp] * rays[rn][j] - val[rn] * rays[rp][j];
        detail::make_primitive(nr);
        created.push_back(std::move(nr));
      }

    std::vector<std::vector<Int>> next;
    std::vector<detail::IncidenceBits> next_inc;
    processed.push_back(pick);
    done[pick] = true;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (val[r] >= 0) {
        next_inc.push_back(detail::incidence(rays[r], h.normals, processed));
        next.push_back(std::move(rays[r]));
      }
    for (auto& r : created) {
      next_inc.push_back(detail::incidence(r, h.normals, processed));
      next.push_back(std::move(r));
    }
    rays = std::move(next);
    inc = std::move(next_inc);

    ++steps_done;
    if (opts.progress) opts.progress(processed.size(), h.normals.size(), rays.size());
    if (!opts.checkpoint_path.empty() && steps_done % 10 == 0) {
      std::ofstream out(opts.checkpoint_path);
      out << "n=" << h.n << " dim=" << h.dim << " count=" << rays.size()
          << " facets_done=" << processed.size() << "\n";
      for (const auto& r : rays) {
        for (std::size_t j = 0; j < r.size(); ++j) out << (j ? " " : "") << r[j];
        out << "\n";
      }
    }
  }

  std::sort(rays.begin(), rays.end());
  RaySet out;
  out.n = h.n;
  out.dim = h.dim;
  out.rays = std::move(rays);
  return out;
}

/// Re-inflates a pinned ray into a SetFunction with singletons at 0.
inline SetFunction ray_to_set_function(const ConeH& h, const std::vector<Int>& ray) {
  std::vector<Rat> v(std::size_t{1} << h.n);
  for (std::size_t j = 0; j < h.coords.size(); ++j) v[h.coords[j]] = Rat(ray[j]);
  return SetFunction(h.n, std::move(v));
}

/// Pinned coordinates of a canonical ray form (singleton values must be 0).
inline std::vector<Int> set_function_to_ray(const ConeH& h, const SetFunction& f) {
  std::vector<Int> r(h.dim);
  for (std::size_t j = 0; j < h.coords.size(); ++j) {
    const Rat& x = f.value(h.coords[j]);
    if (denominator(x) != 1) throw std::invalid_argument("non-integer canonical form");
    r[j] = numerator(x);
  }
  return r;
}

struct CrossCheckEntry {
  std::size_t member;
  std::optional<std::size_t> ray_index;
};

/// Matches the canonical form of each family member against an enumerated ray
/// set; string-exact comparison in pinned coordinates.
inline std::vector<CrossCheckEntry> cross_check(const ConeH& h,
                                                const std::vector<SetFunction>& family,
                                                const RaySet& rays) {
  std::map<std::vector<Int>, std::size_t> lookup;
  for (std::size_t i = 0; i < rays.rays.size(); ++i) lookup[rays.rays[i]] = i;
  std::vector<CrossCheckEntry> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::vector<Int> key = set_function_to_ray(h, canonical_ray_form(family[i]));
    auto it = lookup.find(key);
    out.push_back({i, it == lookup.end() ? std::nullopt : std::optional(it->second)});
  }
  return out;
}

inline void write_ray_set(std::ostream& os, const RaySet& rs) {
  os << "n=" << rs.n << " dim=" << rs.dim << " count=" << rs.rays.size() << "\n";
  for (const auto& r : rs.rays) {
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j];
    os << "\n";
  }
}

inline RaySet read_ray_set(std::istream& is) {
  RaySet rs;
  std::string header;
  if (!std::getline(is, header)) throw std::invalid_argument("empty ray set file");
  std::size_t count = 0;
  if (sscanf(header.c_str(), "n=%d dim=%zu count=%zu", &rs.n, &rs.dim, &count) != 3)
    throw std::invalid_argument("malformed ray set header");
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<Int> r;
    std::string tok;
    while (ls >> tok) r.emplace_back(tok);
    if (r.size() != rs.dim) throw std::invalid_argument("malformed ray line");
    rs.rays.push_back(std::move(r));
  }
  if (rs.rays.size() != count) throw std::invalid_argument("ray count mismatch");
  return rs;
}

}  // namespace defperm
