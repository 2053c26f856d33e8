#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "defperm/matrix.hpp"
#include "defperm/rational.hpp"

namespace defperm {

using Subset = std::uint32_t;           // bitmask over elements 0..n-1
using Permutation = std::vector<int>;   // sigma[k] = element at position k (0-based)
using Point = std::vector<Rat>;

/// A facet inequality of the submodular cone:
///   f(S|y) + f(S|z) >= f(S) + f(S|y|z)   with y != z, S disjoint from {y,z}.
struct TightTriple {
  Subset s;
  int y;  // y < z
  int z;

  auto operator<=>(const TightTriple&) const = default;
};

inline std::vector<TightTriple> all_triples(int n) {
  std::vector<TightTriple> out;
  for (int y = 0; y < n; ++y)
    for (int z = y + 1; z < n; ++z) {
      const Subset rest = ((Subset{1} << n) - 1) & ~(Subset{1} << y) & ~(Subset{1} << z);
      Subset s = rest;
      while (true) {
        out.push_back({s, y, z});
        if (s == 0) break;
        s = (s - 1) & rest;
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// A set function on 2^[n] with f(empty) = 0, stored densely by bitmask.
/// Submodular instances encode deformed n-permutahedra via their support
/// function on 0/1 directions.
class SetFunction {
 public:
  SetFunction(int n, std::vector<Rat> values) : n_(n), values_(std::move(values)) {
    if (n < 1) throw std::invalid_argument("ground set must be nonempty");
    if (values_.size() != (std::size_t{1} << n))
      throw std::invalid_argument("value array must have 2^n entries");
    if (values_[0] != 0) throw std::invalid_argument("f(empty) must be 0");
  }

  static SetFunction zero(int n) {
    return SetFunction(n, std::vector<Rat>(std::size_t{1} << n));
  }

  int n() const { return n_; }
  Subset full() const { return (Subset{1} << n_) - 1; }
  const Rat& value(Subset s) const { return values_[s]; }
  const std::vector<Rat>& values() const { return values_; }

  bool operator==(const SetFunction& o) const = default;

  Rat slack(Subset s, int y, int z) const {
    if (y == z || (s & (Subset{1} << y)) || (s & (Subset{1} << z)))
      throw std::invalid_argument("slack arguments overlap");
    const Subset by = Subset{1} << y, bz = Subset{1} << z;
    return values_[s | by] + values_[s | bz] - values_[s] - values_[s | by | bz];
  }

  Rat slack(const TightTriple& t) const { return slack(t.s, t.y, t.z); }

  bool is_submodular() const { return !first_violated_triple().has_value(); }

  std::optional<TightTriple> first_violated_triple() const {
    for (const TightTriple& t : all_triples(n_))
      if (slack(t) < 0) return t;
    return std::nullopt;
  }

  /// f(A|i) - f(A), the i-th coordinate of the greedy vertex for any chamber
  /// placing exactly the elements of A above i.
  Rat marginal(int i, Subset above) const {
    const Subset bi = Subset{1} << i;
    if (above & bi) throw std::invalid_argument("marginal: i in above-set");
    return values_[above | bi] - values_[above];
  }

  /// Vertex selected by any direction c with c_{sigma(0)} <= ... <= c_{sigma(n-1)}
  /// strict; coordinates filled from the last position downward.
  Point greedy_vertex(const Permutation& sigma) const {
    require_submodular();
    Point x(n_);
    Subset suffix = 0;
    for (int k = n_ - 1; k >= 0; --k) {
      const int i = sigma[k];
      x[i] = marginal(i, suffix);
      suffix |= Subset{1} << i;
    }
    return x;
  }

  bool is_modular() const {
    for (Subset s = 0; s <= full(); ++s) {
      Rat acc = 0;
      for (int i = 0; i < n_; ++i)
        if (s & (Subset{1} << i)) acc += values_[Subset{1} << i];
      if (acc != values_[s]) return false;
    }
    return true;
  }

  SetFunction translate(const std::vector<Rat>& t) const {
    if (static_cast<int>(t.size()) != n_) throw std::invalid_argument("bad translation dim");
    std::vector<Rat> v(values_);
    for (Subset s = 1; s <= full(); ++s)
      for (int i = 0; i < n_; ++i)
        if (s & (Subset{1} << i)) v[s] += t[i];
    return SetFunction(n_, std::move(v));
  }

  SetFunction dilate(const Rat& lambda) const {
    if (lambda < 0) throw std::invalid_argument("dilation factor must be >= 0");
    std::vector<Rat> v(values_);
    for (Rat& x : v) x *= lambda;
    return SetFunction(n_, std::move(v));
  }

  SetFunction minkowski_sum(const SetFunction& g) const {
    if (g.n_ != n_) throw std::invalid_argument("ground set mismatch");
    std::vector<Rat> v(values_);
    for (Subset s = 0; s <= full(); ++s) v[s] += g.values_[s];
    return SetFunction(n_, std::move(v));
  }

  void require_submodular() const {
    if (auto t = first_violated_triple())
      throw std::domain_error("not submodular");
  }

 private:
  int n_;
  std::vector<Rat> values_;
};

/// All n! greedy vertices, cached by permutation, with the deduplicated list.
class VertexTable {
 public:
  VertexTable(const SetFunction& f, int max_n = 10) {
    if (f.n() > max_n) throw std::domain_error("ground set too large");
    f.require_submodular();
    Permutation sigma(f.n());
    for (int i = 0; i < f.n(); ++i) sigma[i] = i;
    do {
      Point v = f.greedy_vertex(sigma);
      entries_.emplace_back(sigma, v);
      dedup_.insert(std::move(v));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }

  const std::vector<std::pair<Permutation, Point>>& entries() const { return entries_; }

  std::vector<Point> distinct() const {
    return {dedup_.begin(), dedup_.end()};
  }

 private:
  std::vector<std::pair<Permutation, Point>> entries_;
  std::set<Point> dedup_;
};

/// Support function of conv(pts) on 0/1 directions, certified: the result is
/// returned only when it is submodular and its greedy vertex set is contained
/// in pts, which together prove conv(pts) is a deformed permutahedron whose
/// vertex set is exactly the greedy set.
inline SetFunction from_vertices(int n, const std::vector<Point>& pts, int max_n = 10) {
  if (pts.empty()) throw std::invalid_argument("empty vertex list");
  Rat total;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (static_cast<int>(pts[k].size()) != n) throw std::invalid_argument("bad point dim");
    Rat s = 0;
    for (const Rat& x : pts[k]) s += x;
    if (k == 0)
      total = s;
    else if (s != total)
      throw std::invalid_argument("unequal coordinate sums");
  }
  const Subset full = (Subset{1} << n) - 1;
  std::vector<Rat> v(std::size_t{1} << n);
  for (Subset s = 1; s <= full; ++s) {
    bool first = true;
    for (const Point& p : pts) {
      Rat acc = 0;
      for (int i = 0; i < n; ++i)
        if (s & (Subset{1} << i)) acc += p[i];
      if (first || acc > v[s]) v[s] = acc, first = false;
    }
  }
  SetFunction f(n, std::move(v));
  if (!f.is_submodular()) throw std::domain_error("not a deformed permutahedron");
  for (const Point& gv : VertexTable(f, max_n).distinct())
    if (std::find(pts.begin(), pts.end(), gv) == pts.end())
      throw std::domain_error("not a deformed permutahedron");
  return f;
}

inline std::vector<TightTriple> tight_set(const SetFunction& f) {
  f.require_submodular();
  std::vector<TightTriple> out;
  for (const TightTriple& t : all_triples(f.n()))
    if (f.slack(t) == 0) out.push_back(t);
  return out;
}

/// Zero-slack pattern in all_triples order; determines the normal fan.
inline std::vector<bool> tight_signature(const SetFunction& f) {
  f.require_submodular();
  std::vector<bool> sig;
  for (const TightTriple& t : all_triples(f.n())) sig.push_back(f.slack(t) == 0);
  return sig;
}

inline bool is_normally_equivalent(const SetFunction& f, const SetFunction& g) {
  if (f.n() != g.n()) throw std::invalid_argument("ground set mismatch");
  return tight_signature(f) == tight_signature(g);
}

/// Dimension of the solution space of { g : g(empty)=0, slack_g(t)=0 for all
/// tight t of f }, in 2^n - 1 unknowns. Counts the n-dimensional lineality of
/// translations, so rays have defo_dim = n + 1.
inline std::size_t defo_dim(const SetFunction& f) {
  const auto tight = tight_set(f);
  const std::size_t cols = (std::size_t{1} << f.n()) - 1;
  RatMatrix m(tight.size(), cols);
  for (std::size_t r = 0; r < tight.size(); ++r) {
    const TightTriple& t = tight[r];
    const Subset by = Subset{1} << t.y, bz = Subset{1} << t.z;
    m.at(r, (t.s | by) - 1) += 1;
    m.at(r, (t.s | bz) - 1) += 1;
    m.at(r, (t.s | by | bz) - 1) -= 1;
    if (t.s != 0) m.at(r, t.s - 1) -= 1;
  }
  return cols - rank(m);
}

struct RayCertificate {
  std::vector<TightTriple> tight;
  std::size_t defo_dim;
  bool indecomposable;
};

inline RayCertificate is_indecomposable(const SetFunction& f) {
  f.require_submodular();
  if (f.is_modular()) throw std::domain_error("point polytope");
  RayCertificate c;
  c.tight = tight_set(f);
  c.defo_dim = defo_dim(f);
  c.indecomposable = (c.defo_dim == static_cast<std::size_t>(f.n()) + 1);
  return c;
}

/// Quotient by the lineality: zero out singletons by a modular shift, then
/// scale to primitive integer values. Two non-modular submodular functions
/// span the same ray modulo translation iff their canonical forms are equal.
inline SetFunction canonical_ray_form(const SetFunction& f) {
  f.require_submodular();
  if (f.is_modular()) throw std::domain_error("lies in lineality");
  std::vector<Rat> t(f.n());
  for (int i = 0; i < f.n(); ++i) t[i] = -f.value(Subset{1} << i);
  SetFunction shifted = f.translate(t);
  std::vector<Int> prim = primitive_integer_form(shifted.values());
  std::vector<Rat> v(prim.size());
  for (std::size_t i = 0; i < prim.size(); ++i) v[i] = Rat(prim[i]);
  return SetFunction(f.n(), std::move(v));
}

/// Optional report helper: true when some relabeling of the ground set maps
/// f to g up to translation and dilation.
inline bool is_coordinate_permutation_equivalent(const SetFunction& f, const SetFunction& g) {
  if (f.n() != g.n()) throw std::invalid_argument("ground set mismatch");
  const SetFunction cf = canonical_ray_form(f);
  const SetFunction cg = canonical_ray_form(g);
  Permutation pi(f.n());
  for (int i = 0; i < f.n(); ++i) pi[i] = i;
  do {
    bool match = true;
    for (Subset s = 1; s <= cf.full() && match; ++s) {
      Subset im = 0;
      for (int i = 0; i < f.n(); ++i)
        if (s & (Subset{1} << i)) im |= Subset{1} << pi[i];
      match = (cf.value(s) == cg.value(im));
    }
    if (match) return true;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

}  // namespace defperm
