#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "defperm/polymatroid.hpp"
#include "defperm/set_function.hpp"

namespace defperm {

/// phi(lambda, mu)_i = min_sigma (lambda P^sigma_i - mu Q^sigma_i), evaluated
/// over the 2^(n-1) above-sets per coordinate.
inline Point phi(const SetFunction& p, const SetFunction& q, const Rat& lambda, const Rat& mu) {
  if (p.n() != q.n()) throw std::invalid_argument("ground set mismatch");
  Point out(p.n());
  for (int i = 0; i < p.n(); ++i) {
    const Subset rest = p.full() & ~(Subset{1} << i);
    bool first = true;
    detail::for_each_submask(rest, [&](Subset a) {
      Rat v = lambda * p.marginal(i, a) - mu * q.marginal(i, a);
      if (first || v < out[i]) out[i] = std::move(v), first = false;
    });
  }
  return out;
}

namespace detail {

// A line lambda -> slope*lambda + intercept, with (slope, intercept) the
// deduplicated vertex-value pair (P^sigma_j, -Q^sigma_j).
struct EnvLine {
  Rat slope;
  Rat intercept;
  bool operator==(const EnvLine& o) const {
    return slope == o.slope && intercept == o.intercept;
  }
  bool operator<(const EnvLine& o) const {
    return slope != o.slope ? slope < o.slope : intercept < o.intercept;
  }
};

inline Rat intersect(const EnvLine& a, const EnvLine& b) {
  return (b.intercept - a.intercept) / (a.slope - b.slope);
}

// Breakpoints of the lower envelope: abscissae where the envelope switches
// between two distinct lines.
inline std::vector<Rat> lower_envelope_breakpoints(std::vector<EnvLine> lines) {
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  // Among equal slopes only the lowest intercept can attain the minimum.
  std::vector<EnvLine> filtered;
  for (const EnvLine& l : lines)
    if (!filtered.empty() && filtered.back().slope == l.slope)
      continue;  // lines sorted: first of each slope has the smallest intercept
    else
      filtered.push_back(l);
  if (filtered.size() < 2) return {};
  // Left to right the envelope uses slopes in decreasing order.
  std::reverse(filtered.begin(), filtered.end());
  std::vector<EnvLine> hull;
  for (const EnvLine& l : filtered) {
    while (hull.size() >= 2 &&
           intersect(hull[hull.size() - 2], l) <= intersect(hull[hull.size() - 2], hull.back()))
      hull.pop_back();
    hull.push_back(l);
  }
  std::vector<Rat> bps;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k)
    bps.push_back(intersect(hull[k], hull[k + 1]));
  return bps;
}

}  // namespace detail

/// Strictly positive breakpoints of lambda -> phi(lambda, 1)_j, sorted. Each
/// one witnesses two permutations with distinct value pairs attaining the
/// minimum, i.e. a seed candidate in coordinate j.
inline std::vector<Rat> seed_breakpoints(const SetFunction& p, const SetFunction& q, int j) {
  if (p.n() != q.n()) throw std::invalid_argument("ground set mismatch");
  std::vector<detail::EnvLine> lines;
  const Subset rest = p.full() & ~(Subset{1} << j);
  detail::for_each_submask(rest, [&](Subset a) {
    lines.push_back({p.marginal(j, a), -q.marginal(j, a)});
  });
  std::vector<Rat> bps = detail::lower_envelope_breakpoints(std::move(lines));
  std::erase_if(bps, [](const Rat& x) { return x <= 0; });
  std::sort(bps.begin(), bps.end());
  return bps;
}

struct SeedReport {
  bool fertile = false;
  std::optional<Rat> lambda_min;            // smallest positive breakpoint, mu = 1
  std::vector<std::vector<Rat>> breakpoints;  // per coordinate, sorted
  std::vector<int> witness_coordinates;       // coordinates attaining lambda_min
};

inline SeedReport seed_report(const SetFunction& p, const SetFunction& q) {
  SeedReport rep;
  rep.breakpoints.resize(p.n());
  for (int j = 0; j < p.n(); ++j) {
    rep.breakpoints[j] = seed_breakpoints(p, q, j);
    if (rep.breakpoints[j].empty()) continue;
    rep.fertile = true;
    const Rat& first = rep.breakpoints[j].front();
    if (!rep.lambda_min || first < *rep.lambda_min) rep.lambda_min = first;
  }
  if (rep.lambda_min)
    for (int j = 0; j < p.n(); ++j)
      if (!rep.breakpoints[j].empty() && rep.breakpoints[j].front() == *rep.lambda_min)
        rep.witness_coordinates.push_back(j);
  return rep;
}

namespace detail {

// The min/max coincidence criterion: (P, Q) is infertile iff for every i some
// above-set simultaneously attains min P-marginal and max Q-marginal. The
// extremes are the marginals at the full above-set and the empty one.
inline bool fertile_fast(const SetFunction& p, const SetFunction& q) {
  for (int i = 0; i < p.n(); ++i) {
    const Subset rest = p.full() & ~(Subset{1} << i);
    const Rat p_min = p.marginal(i, rest);
    const Rat q_max = q.marginal(i, 0);
    assert(p.marginal(i, 0) >= p_min && q.marginal(i, rest) <= q_max);
    bool coincide = false;
    detail::for_each_submask(rest, [&](Subset a) {
      if (!coincide && p.marginal(i, a) == p_min && q.marginal(i, a) == q_max) coincide = true;
    });
    if (!coincide) return true;
  }
  return false;
}

}  // namespace detail

/// Envelope route, kept independent of the fast test for cross-checking.
inline bool is_fertile_by_envelope(const SetFunction& p, const SetFunction& q) {
  for (int j = 0; j < p.n(); ++j)
    if (!seed_breakpoints(p, q, j).empty()) return true;
  return false;
}

inline bool is_fertile(const SetFunction& p, const SetFunction& q) {
  if (p.n() != q.n()) throw std::invalid_argument("ground set mismatch");
  if (!is_indecomposable(p).indecomposable || !is_indecomposable(q).indecomposable)
    throw std::domain_error("fertility is defined for indecomposable non-points");
  return detail::fertile_fast(p, q);
}

inline std::pair<Rat, Rat> min_seed(const SetFunction& p, const SetFunction& q) {
  SeedReport rep = seed_report(p, q);
  if (!rep.fertile) throw std::domain_error("no seed");
  return {*rep.lambda_min, Rat(1)};
}

struct ComposeResult {
  SetFunction lifted;  // deformed (n+1)-permutahedron
  Rat lambda;
  Point shift;  // phi(lambda, 1)
  std::optional<RayCertificate> certificate;
};

/// Manufactures a ray of SC[n+1] from a fertile pair: the lifted GP-sum of
/// (lambda P) over (Q + phi(lambda, 1)) at the minimal seed. Postconditions
/// (submodularity, normal equivalence of the faces, and optionally the rank
/// certificate) are re-checked; a failure signals an implementation bug.
inline ComposeResult compose(const SetFunction& p, const SetFunction& q, bool certify = true) {
  auto [lambda, mu] = min_seed(p, q);
  (void)mu;
  const Point shift = phi(p, q, lambda, Rat(1));
  const SetFunction top = p.dilate(lambda);
  const SetFunction bottom = q.translate(shift);
  GPolymatroid r = gp_sum(top, bottom);
  ComposeResult out{r.lifted(), lambda, shift, std::nullopt};
  if (!is_normally_equivalent(r.top_face(), p) || !is_normally_equivalent(r.bottom_face(), q))
    throw std::logic_error("compose: face normal equivalence failed");
  if (certify) {
    RayCertificate cert = is_indecomposable(out.lifted);
    if (!cert.indecomposable) throw std::logic_error("compose: rank certificate failed");
    out.certificate = std::move(cert);
  }
  return out;
}

/// Directed fertility graph over a family; edge u -> v iff (u, v) is fertile.
/// Loops are implied and not stored.
inline std::vector<std::pair<int, int>> fertility_graph(const std::vector<SetFunction>& family) {
  for (const SetFunction& f : family)
    if (!is_indecomposable(f).indecomposable)
      throw std::domain_error("fertility graph requires indecomposable members");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t u = 0; u < family.size(); ++u)
    for (std::size_t v = 0; v < family.size(); ++v)
      if (u != v && detail::fertile_fast(family[u], family[v]))
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return edges;
}

}  // namespace defperm
