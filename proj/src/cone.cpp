// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors

#include "nashcone/cone.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "nashcone/feasibility.hpp"

namespace nashcone {

Cone::Cone(std::vector<LatticeVector> edges, std::size_t ambient_dim)
    : edges_(std::move(edges)), ambient_dim_(ambient_dim) {
  if (ambient_dim_ == 0) throw StructuralError("cone: ambient dimension must be >= 1");
  for (const auto& e : edges_) {
    if (e.dim() != ambient_dim_)
      throw StructuralError("cone: edge dimension does not match ambient dimension");
    if (e.is_zero()) throw StructuralError("cone: zero vector is not an edge");
    if (primitive(e) != e)
      throw StructuralError("cone: edge " + e.str() + " is not primitive");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = i + 1; j < edges_.size(); ++j)
      if (edges_[i] == edges_[j])
        throw StructuralError("cone: repeated edge " + edges_[i].str());
}

Fan::Fan(std::vector<std::string> ray_names, std::vector<LatticeVector> rays,
         std::vector<std::array<std::size_t, 3>> max_cones)
    : ray_names_(std::move(ray_names)),
      rays_(std::move(rays)),
      max_cones_(std::move(max_cones)) {
  if (ray_names_.size() != rays_.size())
    throw StructuralError("fan: one name per ray required");
  if (rays_.empty()) throw StructuralError("fan: no rays");
  std::set<std::string> seen;
  for (const auto& n : ray_names_) {
    if (n.empty()) throw StructuralError("fan: empty ray name");
    if (!seen.insert(n).second) throw StructuralError("fan: duplicate ray name " + n);
  }
  for (const auto& r : rays_) {
    if (r.dim() != 3) throw StructuralError("fan: rays must have dimension 3");
    if (r.is_zero() || primitive(r) != r)
      throw StructuralError("fan: ray " + r.str() + " is not primitive");
  }
  for (std::size_t i = 0; i < rays_.size(); ++i)
    for (std::size_t j = i + 1; j < rays_.size(); ++j)
      if (rays_[i] == rays_[j])
        throw StructuralError("fan: rays " + ray_names_[i] + " and " + ray_names_[j] +
                              " coincide");
  if (max_cones_.empty()) throw StructuralError("fan: no maximal cones");
  std::vector<bool> used(rays_.size(), false);
  for (const auto& tri : max_cones_) {
    for (std::size_t k : tri) {
      if (k >= rays_.size()) throw StructuralError("fan: ray index out of range");
      used[k] = true;
    }
    if (tri[0] == tri[1] || tri[0] == tri[2] || tri[1] == tri[2])
      throw StructuralError("fan: maximal cone with repeated ray");
  }
  for (std::size_t k = 0; k < used.size(); ++k)
    if (!used[k])
      throw StructuralError("fan: ray " + ray_names_[k] + " occurs in no maximal cone");
}

std::size_t Fan::ray_index(std::string_view name) const {
  for (std::size_t i = 0; i < ray_names_.size(); ++i)
    if (ray_names_[i] == name) return i;
  throw StructuralError("fan: unknown ray " + std::string(name));
}

const LatticeVector& Fan::ray(std::string_view name) const {
  return rays_[ray_index(name)];
}

Cone Fan::wall(std::string_view name1, std::string_view name2) const {
  return Cone({ray(name1), ray(name2)}, 3);
}

namespace {

LatticeVector cross(const LatticeVector& a, const LatticeVector& b) {
  return LatticeVector(std::vector<Int>{a[1] * b[2] - a[2] * b[1],
                                        a[2] * b[0] - a[0] * b[2],
                                        a[0] * b[1] - a[1] * b[0]});
}

Int dot(const LatticeVector& a, const LatticeVector& b) {
  Int acc = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

bool is_strictly_convex(const Cone& cone) {
  const std::size_t m = cone.edges().size();
  if (m == 0) return true;
  // A line inside the cone <=> some nonzero nonnegative combination of the
  // edges vanishes; normalize the combination to coefficient sum 1.
  FeasibilitySystem sys(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Int> row(m, 0);
    row[i] = 1;
    sys.add_lower(std::move(row), 0);
  }
  sys.add_equal(std::vector<Int>(m, 1), 1);
  for (std::size_t k = 0; k < cone.ambient_dim(); ++k) {
    std::vector<Int> row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = cone.edges()[i][k];
    sys.add_equal(std::move(row), 0);
  }
  return !is_feasible(sys);
}

bool contains(const Cone& cone, const LatticeVector& v) {
  if (v.dim() != cone.ambient_dim())
    throw StructuralError("contains: dimension mismatch");
  const std::size_t m = cone.edges().size();
  if (m == 0) return v.is_zero();
  FeasibilitySystem sys(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Int> row(m, 0);
    row[i] = 1;
    sys.add_lower(std::move(row), 0);
  }
  for (std::size_t k = 0; k < cone.ambient_dim(); ++k) {
    std::vector<Int> row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = cone.edges()[i][k];
    sys.add_equal(std::move(row), v[k]);
  }
  return is_feasible(sys);
}

bool is_regular(const Cone& cone) {
  if (cone.edges().size() != cone.ambient_dim())
    throw DomainError("is_regular: expected a simplicial full-dimensional cone");
  return abs(det(cone.edges())) == 1;
}

bool fan_is_subdivision_of(const Fan& fan, const Cone& target) {
  if (target.ambient_dim() != 3)
    throw StructuralError("subdivision check: target must live in rank 3");

  // The target's edges must occur among the fan's rays...
  for (const auto& e : target.edges()) {
    if (std::find(fan.rays().begin(), fan.rays().end(), e) == fan.rays().end())
      return false;
  }
  // ...and every ray must lie inside the target.
  for (const auto& r : fan.rays())
    if (!contains(target, r)) return false;

  // Wall accounting: each 2-face of a maximal cone is either interior
  // (shared by exactly two cones on opposite sides of its plane) or lies in
  // the target's boundary.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> opposites;
  for (const auto& tri : fan.max_cones()) {
    for (int w = 0; w < 3; ++w) {
      std::size_t i = tri[(w + 1) % 3], j = tri[(w + 2) % 3];
      if (i > j) std::swap(i, j);
      opposites[{i, j}].push_back(tri[w]);
    }
  }
  for (const auto& [wall, opp] : opposites) {
    const LatticeVector normal = cross(fan.rays()[wall.first], fan.rays()[wall.second]);
    if (normal.is_zero()) return false;  // degenerate 2-face
    if (opp.size() == 2) {
      const Int s1 = dot(normal, fan.rays()[opp[0]]);
      const Int s2 = dot(normal, fan.rays()[opp[1]]);
      if (s1 == 0 || s2 == 0 || sign(s1) == sign(s2)) return false;
    } else if (opp.size() == 1) {
      int pos = 0, neg = 0;
      for (const auto& e : target.edges()) {
        const int s = sign(dot(normal, e));
        pos += (s > 0);
        neg += (s < 0);
      }
      if (pos > 0 && neg > 0) return false;  // wall plane cuts the target open
    } else {
      return false;  // a 2-face shared by three or more cones
    }
  }
  return true;
}

WallRelation wall_relation(const Fan& fan, const Cone& wall) {
  if (wall.edges().size() != 2 || wall.ambient_dim() != 3)
    throw DomainError("wall_relation: the wall must be a 2-dimensional cone in rank 3");

  std::size_t i1 = fan.rays().size(), i2 = fan.rays().size();
  for (std::size_t k = 0; k < fan.rays().size(); ++k) {
    if (fan.rays()[k] == wall.edges()[0]) i1 = k;
    if (fan.rays()[k] == wall.edges()[1]) i2 = k;
  }
  if (i1 >= fan.rays().size() || i2 >= fan.rays().size())
    throw DomainError("wall_relation: the wall's edges are not rays of the fan");

  std::vector<std::size_t> opposite;
  for (const auto& tri : fan.max_cones()) {
    const bool has1 = tri[0] == i1 || tri[1] == i1 || tri[2] == i1;
    const bool has2 = tri[0] == i2 || tri[1] == i2 || tri[2] == i2;
    if (has1 && has2)
      for (std::size_t k : tri)
        if (k != i1 && k != i2) opposite.push_back(k);
  }
  if (opposite.size() != 2)
    throw DomainError("wall_relation: wall is not interior (shared by " +
                      std::to_string(opposite.size()) + " maximal cones, need 2)");

  const LatticeVector &v1 = fan.rays()[i1], &v2 = fan.rays()[i2];
  const LatticeVector &v3 = fan.rays()[opposite[0]], &v4 = fan.rays()[opposite[1]];

  // v3 + v4 + a v1 + b v2 = 0  <=>  v4 = -a v1 - b v2 - v3.
  const std::vector<Rat> c = solve_in_basis({v1, v2, v3}, v4);
  if (c[2] != -1 || denominator(c[0]) != 1 || denominator(c[1]) != 1)
    throw InternalError("wall_relation: relation around the wall is not integral; "
                        "the fan is not regular across it");
  WallRelation rel;
  rel.wall_ray1 = fan.ray_names()[i1];
  rel.wall_ray2 = fan.ray_names()[i2];
  rel.opposite1 = fan.ray_names()[opposite[0]];
  rel.opposite2 = fan.ray_names()[opposite[1]];
  rel.coeff1 = -numerator(c[0]);
  rel.coeff2 = -numerator(c[1]);
  for (const auto& name : fan.ray_names()) rel.intersection_numbers[name] = 0;
  rel.intersection_numbers[rel.wall_ray1] = rel.coeff1;
  rel.intersection_numbers[rel.wall_ray2] = rel.coeff2;
  rel.intersection_numbers[rel.opposite1] = 1;
  rel.intersection_numbers[rel.opposite2] = 1;
  return rel;
}

}  // namespace nashcone
