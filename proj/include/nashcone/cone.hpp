// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors
//
// Rational polyhedral cones given by primitive edge generators, and
// 3-dimensional fans of simplicial cones: strict convexity, exact
// membership, regularity, subdivision checks and wall relations.

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nashcone/lattice.hpp"

namespace nashcone {

/// A rational polyhedral cone spanned by the listed edges. Edges must be
/// primitive and pairwise span distinct rays; opposite rays are allowed
/// (such a cone contains a line and is not strictly convex).
class Cone {
 public:
  Cone(std::vector<LatticeVector> edges, std::size_t ambient_dim);

  const std::vector<LatticeVector>& edges() const noexcept { return edges_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }

 private:
  std::vector<LatticeVector> edges_;
  std::size_t ambient_dim_;
};

/// A fan in a rank-3 lattice: named primitive rays plus maximal cones given
/// as index triples. Face compatibility between the listed cones is checked
/// where it is consumed (subdivision test, wall relations), not here.
class Fan {
 public:
  Fan(std::vector<std::string> ray_names, std::vector<LatticeVector> rays,
      std::vector<std::array<std::size_t, 3>> max_cones);

  const std::vector<std::string>& ray_names() const noexcept { return ray_names_; }
  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  const std::vector<std::array<std::size_t, 3>>& max_cones() const noexcept {
    return max_cones_;
  }

  std::size_t ray_index(std::string_view name) const;
  const LatticeVector& ray(std::string_view name) const;

  /// The 2-dimensional cone spanned by two named rays.
  Cone wall(std::string_view name1, std::string_view name2) const;

 private:
  std::vector<std::string> ray_names_;
  std::vector<LatticeVector> rays_;
  std::vector<std::array<std::size_t, 3>> max_cones_;
};

/// True iff the cone contains no line: no nonzero nonnegative combination
/// of the edges vanishes. Decided by exact rational feasibility.
bool is_strictly_convex(const Cone& cone);

/// True iff v is a nonnegative rational combination of the edges.
bool contains(const Cone& cone, const LatticeVector& v);

/// True iff the simplicial cone is generated by part of a lattice basis,
/// i.e. |det(edges)| = 1. Requires exactly ambient_dim edges.
bool is_regular(const Cone& cone);

/// True iff the union of the fan's maximal cones is exactly `target`.
/// Implemented for fans of full-dimensional simplicial cones in rank 3:
/// every ray must lie in the target, the target's edges must occur among
/// the rays, interior walls must be shared by exactly two cones sitting on
/// opposite sides, and boundary walls must lie in the target's boundary.
bool fan_is_subdivision_of(const Fan& fan, const Cone& target);

/// The integer relation around an interior wall of a regular fan. For a
/// 2-cone <u1,u2> shared by exactly the maximal cones <u1,u2,u3> and
/// <u1,u2,u4> there are unique integers a, b with
///     v3 + v4 + a v1 + b v2 = 0,
/// and a, b are the intersection numbers of the wall's orbit closure with
/// the divisors of u1, u2; against u3, u4 the intersection number is 1.
struct WallRelation {
  std::string wall_ray1, wall_ray2;  // u1, u2
  std::string opposite1, opposite2;  // u3, u4
  Int coeff1, coeff2;                // a, b
  std::map<std::string, Int> intersection_numbers;  // every ray of the fan
};

WallRelation wall_relation(const Fan& fan, const Cone& wall);

}  // namespace nashcone
