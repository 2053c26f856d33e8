#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "defperm/set_function.hpp"

namespace defperm {

namespace detail {
// Enumerates subsets of mask, largest first, ending with 0.
template <typename F>
void for_each_submask(Subset mask, F&& fn) {
  Subset s = mask;
  while (true) {
    fn(s);
    if (s == 0) break;
    s = (s - 1) & mask;
  }
}
}  // namespace detail

/// Q is a quotient of P: Q^sigma_i <= P^sigma_i for all sigma, i. The vertex
/// coordinate for sigma depends only on the set of elements placed above i,
/// so the n!*n inequalities reduce to n*2^(n-1) marginal comparisons.
inline bool is_quotient(const SetFunction& p, const SetFunction& q) {
  if (p.n() != q.n()) throw std::invalid_argument("ground set mismatch");
  for (int i = 0; i < p.n(); ++i) {
    const Subset rest = p.full() & ~(Subset{1} << i);
    bool ok = true;
    detail::for_each_submask(rest, [&](Subset a) {
      if (q.marginal(i, a) > p.marginal(i, a)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

inline bool is_generic_quotient(const SetFunction& p, const SetFunction& q) {
  if (p.n() != q.n()) throw std::invalid_argument("ground set mismatch");
  for (int i = 0; i < p.n(); ++i) {
    const Subset rest = p.full() & ~(Subset{1} << i);
    bool ok = true;
    detail::for_each_submask(rest, [&](Subset a) {
      if (q.marginal(i, a) >= p.marginal(i, a)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

/// t with t_i = min_sigma(P^sigma_i - Q^sigma_i) - 1, so that (P, Q + t) is a
/// generic quotient.
inline std::vector<Rat> translate_to_generic(const SetFunction& p, const SetFunction& q) {
  if (p.n() != q.n()) throw std::invalid_argument("ground set mismatch");
  std::vector<Rat> t(p.n());
  for (int i = 0; i < p.n(); ++i) {
    const Subset rest = p.full() & ~(Subset{1} << i);
    bool first = true;
    detail::for_each_submask(rest, [&](Subset a) {
      Rat d = p.marginal(i, a) - q.marginal(i, a);
      if (first || d < t[i]) t[i] = d, first = false;
    });
    t[i] -= 1;
  }
  return t;
}

/// A generalized n-polymatroid, stored as the submodular function of its lift
/// to a deformed (n+1)-permutahedron normalized to coordinate sum 0.
class GPolymatroid {
 public:
  explicit GPolymatroid(SetFunction lifted) : lifted_(std::move(lifted)) {
    if (lifted_.value(lifted_.full()) != 0)
      throw std::invalid_argument("lifted function must vanish on the full set");
    lifted_.require_submodular();
  }

  /// Normalizes a deformed (n+1)-permutahedron by the e_{n+1} translation
  /// bringing its coordinate sum to 0; inverse of taking lift vertices.
  static GPolymatroid from_deformed(const SetFunction& h) {
    std::vector<Rat> t(h.n());
    t[h.n() - 1] = -h.value(h.full());
    return GPolymatroid(h.translate(t));
  }

  int n() const { return lifted_.n() - 1; }
  const SetFunction& lifted() const { return lifted_; }

  /// Upper bound p(S) of the (p, b) description.
  Rat p(Subset s) const { return lifted_.value(s); }

  /// Lower bound b(T): minimum of the coordinate sum over T.
  Rat b(Subset t) const {
    const Subset ground = (Subset{1} << n()) - 1;
    const Subset lift_bit = Subset{1} << n();
    return -lifted_.value((ground & ~t) | lift_bit);
  }

  SetFunction top_face() const {
    std::vector<Rat> v(std::size_t{1} << n());
    for (Subset s = 0; s < v.size(); ++s) v[s] = lifted_.value(s);
    return SetFunction(n(), std::move(v));
  }

  SetFunction bottom_face() const {
    const Subset lift_bit = Subset{1} << n();
    std::vector<Rat> v(std::size_t{1} << n());
    for (Subset s = 0; s < v.size(); ++s)
      v[s] = lifted_.value(s | lift_bit) - lifted_.value(lift_bit);
    return SetFunction(n(), std::move(v));
  }

  bool operator==(const GPolymatroid&) const = default;

 private:
  SetFunction lifted_;
};

/// GP-sum (Q + R+^n) cap (P + R-^n) of a quotient pair, by the closed form
///   g(X) = f_P(X)                      if n+1 not in X
///   g(X) = f_Q(X cap [n]) - f_Q([n])   otherwise.
inline GPolymatroid gp_sum(const SetFunction& p, const SetFunction& q) {
  if (p.n() != q.n()) throw std::invalid_argument("ground set mismatch");
  for (int i = 0; i < p.n(); ++i) {
    const Subset rest = p.full() & ~(Subset{1} << i);
    Subset bad = 0;
    bool ok = true;
    detail::for_each_submask(rest, [&](Subset a) {
      if (ok && q.marginal(i, a) > p.marginal(i, a)) ok = false, bad = a;
    });
    if (!ok)
      throw std::domain_error("quotient violated (i, above-set) = (" +
                              std::to_string(i + 1) + ", " + std::to_string(bad) + ")");
  }
  const int n = p.n();
  const Subset lift_bit = Subset{1} << n;
  const Rat q_total = q.value(q.full());
  std::vector<Rat> v(std::size_t{1} << (n + 1));
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    v[s] = p.value(s);
    v[s | lift_bit] = q.value(s) - q_total;
  }
  return GPolymatroid(SetFunction(n + 1, std::move(v)));
}

/// R+^n cap (P - t + R-^n) with t the coordinatewise minimum of P, as the
/// GP-sum of the shifted polytope with the origin.
inline GPolymatroid independence_polytope(const SetFunction& p) {
  p.require_submodular();
  std::vector<Rat> t(p.n());
  for (int i = 0; i < p.n(); ++i)
    t[i] = p.value(p.full() & ~(Subset{1} << i)) - p.value(p.full());
  return gp_sum(p.translate(t), SetFunction::zero(p.n()));
}

}  // namespace defperm
