#pragma once

// Shared corpus for the test suites: the five indecomposable deformed
// 3-permutahedra (three segments, two triangles), the standard permutahedron,
// and the 11-member pairwise-fertile family of deformed 4-permutahedra.

#include <vector>

#include "defperm/set_function.hpp"

namespace fixtures {

using defperm::Point;
using defperm::Rat;
using defperm::SetFunction;

inline Point pt(std::initializer_list<int> xs) {
  Point p;
  for (int x : xs) p.emplace_back(x);
  return p;
}

inline SetFunction s1() { return defperm::from_vertices(3, {pt({0, 0, 0}), pt({1, -1, 0})}); }
inline SetFunction s2() { return defperm::from_vertices(3, {pt({0, 0, 0}), pt({0, 1, -1})}); }
inline SetFunction s3() { return defperm::from_vertices(3, {pt({0, 0, 0}), pt({1, 0, -1})}); }

inline SetFunction t1() {
  return defperm::from_vertices(3, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
}

inline SetFunction t2() {
  return defperm::from_vertices(3, {pt({-1, 0, 0}), pt({0, -1, 0}), pt({0, 0, -1})});
}

/// The five representatives, indexed as S1, S2, S3, T1, T2.
inline std::vector<SetFunction> corpus3() { return {s1(), s2(), s3(), t1(), t2()}; }

inline SetFunction permutahedron3() {
  return defperm::from_vertices(3, {pt({1, 2, 3}), pt({1, 3, 2}), pt({2, 1, 3}), pt({2, 3, 1}),
                                    pt({3, 1, 2}), pt({3, 2, 1})});
}

inline std::vector<std::vector<Point>> family11_vertices() {
  return {
      {pt({2, 2, 3, 1}), pt({2, 3, 2, 1}), pt({2, 3, 3, 0}), pt({3, 2, 2, 1}), pt({3, 2, 3, 0}),
       pt({3, 3, 2, 0})},
      {pt({2, 2, 3, 1}), pt({2, 3, 2, 1}), pt({2, 3, 3, 0}), pt({3, 2, 2, 1}), pt({3, 2, 3, 0}),
       pt({3, 3, 2, 0}), pt({4, 2, 2, 0})},
      {pt({2, 2, 3, 1}), pt({2, 3, 2, 1}), pt({2, 3, 3, 0}), pt({2, 4, 2, 0}), pt({3, 2, 2, 1}),
       pt({3, 2, 3, 0}), pt({3, 3, 2, 0})},
      {pt({2, 2, 3, 1}), pt({2, 2, 4, 0}), pt({2, 3, 2, 1}), pt({2, 3, 3, 0}), pt({3, 2, 2, 1}),
       pt({3, 2, 3, 0}), pt({3, 3, 2, 0})},
      {pt({2, 2, 2, 2}), pt({2, 2, 3, 1}), pt({2, 3, 2, 1}), pt({2, 3, 3, 0}), pt({3, 2, 2, 1}),
       pt({3, 2, 3, 0}), pt({3, 3, 2, 0})},
      {pt({4, 5, 5, 2}), pt({4, 5, 6, 1}), pt({4, 6, 4, 2}), pt({4, 6, 5, 1}), pt({5, 4, 5, 2}),
       pt({5, 4, 6, 1}), pt({5, 5, 4, 2}), pt({5, 5, 6, 0}), pt({5, 6, 4, 1}), pt({5, 6, 5, 0}),
       pt({6, 4, 5, 1}), pt({6, 5, 4, 1}), pt({6, 5, 5, 0})},
      {pt({4, 4, 6, 2}), pt({4, 5, 5, 2}), pt({4, 5, 6, 1}), pt({4, 6, 5, 1}), pt({5, 4, 5, 2}),
       pt({5, 4, 6, 1}), pt({5, 5, 4, 2}), pt({5, 5, 6, 0}), pt({5, 6, 4, 1}), pt({5, 6, 5, 0}),
       pt({6, 4, 5, 1}), pt({6, 5, 4, 1}), pt({6, 5, 5, 0})},
      {pt({4, 5, 5, 2}), pt({4, 5, 6, 1}), pt({4, 6, 5, 1}), pt({4, 6, 6, 0}), pt({5, 4, 5, 2}),
       pt({5, 4, 6, 1}), pt({5, 5, 4, 2}), pt({5, 5, 6, 0}), pt({5, 6, 4, 1}), pt({5, 6, 5, 0}),
       pt({6, 4, 5, 1}), pt({6, 5, 4, 1}), pt({6, 5, 5, 0})},
      {pt({4, 5, 5, 2}), pt({4, 5, 6, 1}), pt({4, 6, 5, 1}), pt({5, 4, 5, 2}), pt({5, 4, 6, 1}),
       pt({5, 5, 4, 2}), pt({5, 5, 6, 0}), pt({5, 6, 4, 1}), pt({5, 6, 5, 0}), pt({6, 4, 4, 2}),
       pt({6, 4, 5, 1}), pt({6, 5, 4, 1}), pt({6, 5, 5, 0})},
      {pt({4, 5, 5, 2}), pt({4, 5, 6, 1}), pt({4, 6, 5, 1}), pt({5, 4, 5, 2}), pt({5, 4, 6, 1}),
       pt({5, 5, 4, 2}), pt({5, 5, 6, 0}), pt({5, 6, 4, 1}), pt({5, 6, 5, 0}), pt({6, 4, 5, 1}),
       pt({6, 4, 6, 0}), pt({6, 5, 4, 1}), pt({6, 5, 5, 0})},
      {pt({4, 5, 5, 2}), pt({4, 5, 6, 1}), pt({4, 6, 5, 1}), pt({5, 4, 5, 2}), pt({5, 4, 6, 1}),
       pt({5, 5, 4, 2}), pt({5, 5, 6, 0}), pt({5, 6, 4, 1}), pt({5, 6, 5, 0}), pt({6, 4, 5, 1}),
       pt({6, 5, 4, 1}), pt({6, 5, 5, 0}), pt({6, 6, 4, 0})},
  };
}

inline std::vector<SetFunction> family11() {
  std::vector<SetFunction> out;
  for (const auto& verts : family11_vertices()) out.push_back(defperm::from_vertices(4, verts));
  return out;
}

inline std::vector<Point> square_pyramid_vertices() {
  return {pt({0, -1, 0, 1}), pt({0, 0, -1, 1}), pt({0, 0, 0, 0}), pt({1, -1, -1, 1}),
          pt({1, -1, 0, 0})};
}

inline std::vector<Point> octahedron_vertices() {
  return {pt({-1, -1, 0, 2}), pt({-1, 0, -1, 2}), pt({-1, 0, 0, 1}), pt({0, -1, -1, 2}),
          pt({0, -1, 0, 1}), pt({0, 0, -1, 1})};
}

/// Known fertility digraph on (S1, S2, S3, T1, T2), 0-based indices.
inline std::vector<std::pair<int, int>> fertility_digraph3() {
  return {{0, 3}, {1, 3}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}};
}

}  // namespace fixtures
