// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nashcone/cone.hpp"

using namespace nashcone;

namespace {

const LatticeVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};

Cone octant() { return Cone({e1, e2, e3}, 3); }

// gamma at (d1, d2, x1, x2) = (1, 1, 2, 2): edges a, e, d, f
Cone gamma_1122() {
  return Cone({{1, 0, 0}, {0, 0, 1}, {-2, 3, 0}, {-1, 3, -1}}, 3);
}

// The six maximal cones at (1, 1, 2, 2) around the chain a, b, c, d.
Fan fan_1122() {
  return Fan({"a", "b", "c", "d", "e", "f"},
             {{1, 0, 0}, {0, 1, 0}, {-1, 2, 0}, {-2, 3, 0}, {0, 0, 1}, {-1, 3, -1}},
             {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 1, 5}, {1, 2, 5}, {2, 3, 5}});
}

}  // namespace

TEST_CASE("cone construction validates edges") {
  CHECK_THROWS_AS(Cone({LatticeVector{2, 4, 0}}, 3), StructuralError);  // not primitive
  CHECK_THROWS_AS(Cone({e1, e1}, 3), StructuralError);                  // repeated
  CHECK_THROWS_AS(Cone({LatticeVector{1, 0}}, 3), StructuralError);     // wrong dim
  CHECK_NOTHROW(Cone({e1, -e1}, 3));  // opposite rays are distinct edges
}

TEST_CASE("strict convexity on pinned examples") {
  CHECK(is_strictly_convex(octant()));
  CHECK_FALSE(is_strictly_convex(Cone({e1, -e1}, 3)));
  const Cone gamma = gamma_1122();
  CHECK(is_strictly_convex(gamma));
  // Independent certificate: (1, 1, 1) is strictly positive on every edge
  // of gamma, so gamma contains no line. The boundary form (3, 2, 0) from
  // the convexity certificate vanishes on d and e and is positive on a, f.
  const LinearForm positive{1, 1, 1};
  for (const auto& e : gamma.edges()) CHECK(pairing(positive, e) > 0);
  const LinearForm boundary{3, 2, 0};
  CHECK(pairing(boundary, gamma.edges()[0]) > 0);   // a
  CHECK(pairing(boundary, gamma.edges()[1]) == 0);  // e
  CHECK(pairing(boundary, gamma.edges()[2]) == 0);  // d
  CHECK(pairing(boundary, gamma.edges()[3]) > 0);   // f
}

TEST_CASE("membership on pinned examples") {
  CHECK(contains(octant(), LatticeVector{2, 3, 5}));
  CHECK_FALSE(contains(octant(), LatticeVector{-1, 0, 0}));
  // Independent certificate: v_b = (2/3) a + (1/3) d inside gamma(1,1,2,2).
  const Cone gamma = gamma_1122();
  const LatticeVector vb{0, 1, 0};
  {
    const Rat two_thirds(2, 3), one_third(1, 3);
    for (int k = 0; k < 3; ++k) {
      const Rat lhs = two_thirds * Rat(gamma.edges()[0][k]) +
                      one_third * Rat(gamma.edges()[2][k]);
      CHECK(lhs == Rat(vb[k]));
    }
  }
  CHECK(contains(gamma, vb));
  CHECK(contains(gamma, LatticeVector{0, 0, 0}));
}

TEST_CASE("membership properties") {
  const Cone gamma = gamma_1122();
  for (const auto& e : gamma.edges()) CHECK(contains(gamma, e));
  // sums of members stay inside
  const LatticeVector u = gamma.edges()[0] + gamma.edges()[1];
  const LatticeVector w = gamma.edges()[2] + gamma.edges()[3];
  CHECK(contains(gamma, u));
  CHECK(contains(gamma, w));
  CHECK(contains(gamma, u + w));
  // strict convexity forbids the opposite of a nonzero member
  CHECK(is_strictly_convex(gamma));
  CHECK_FALSE(contains(gamma, -u));
  CHECK_FALSE(contains(gamma, -w));
}

TEST_CASE("regularity on pinned examples") {
  CHECK(is_regular(octant()));
  // primitive edges spanning an index-2 sublattice
  CHECK_FALSE(is_regular(
      Cone({LatticeVector{0, 1, 1}, LatticeVector{1, 0, 1}, LatticeVector{1, 1, 0}}, 3)));
  CHECK_THROWS_AS(is_regular(Cone({e1, e2}, 3)), DomainError);
  CHECK_THROWS_AS(is_regular(gamma_1122()), DomainError);  // four edges
}

TEST_CASE("the cone <c,d,e> is regular for every twist pair") {
  for (long x1 = 1; x1 <= 5; ++x1) {
    for (long x2 = 1; x2 <= 5; ++x2) {
      const LatticeVector vc{-1, x1, 0};
      const LatticeVector vd{-x2, x1 * x2 - 1, 0};
      const LatticeVector ve{0, 0, 1};
      if (vc == vd) continue;  // never happens; guard for clarity
      CHECK(is_regular(Cone({vc, vd, ve}, 3)));
    }
  }
}

TEST_CASE("all six chamber shapes are regular over the parameter box") {
  // The chambers exist as cones for every positive tuple, even where the
  // union degenerates (x1 = x2 = 1) and no model is built.
  for (long d1 = 1; d1 <= 5; ++d1)
    for (long d2 = 1; d2 <= 5; ++d2)
      for (long x1 = 1; x1 <= 5; ++x1)
        for (long x2 = 1; x2 <= 5; ++x2) {
          const LatticeVector a{1, 0, 0}, b{0, 1, 0}, e{0, 0, 1};
          const LatticeVector c{-1, x1, 0};
          const LatticeVector d{-x2, x1 * x2 - 1, 0};
          const LatticeVector f{-d1, d2 + d1 * x1, -1};
          for (const auto& tri : {std::array{a, b, e}, std::array{b, c, e},
                                  std::array{c, d, e}, std::array{a, b, f},
                                  std::array{b, c, f}, std::array{c, d, f}}) {
            CHECK(is_regular(Cone({tri[0], tri[1], tri[2]}, 3)));
          }
        }
}

TEST_CASE("regularity is invariant under edge permutations") {
  const std::vector<LatticeVector> edges{{0, 1, 0}, {-1, 2, 0}, {0, 0, 1}};
  std::vector<int> perm{0, 1, 2};
  do {
    CHECK(is_regular(Cone({edges[perm[0]], edges[perm[1]], edges[perm[2]]}, 3)));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("subdivision check on pinned examples") {
  const Fan trivial({"x", "y", "z"}, {e1, e2, e3}, {{0, 1, 2}});
  CHECK(fan_is_subdivision_of(trivial, octant()));
  CHECK(fan_is_subdivision_of(fan_1122(), gamma_1122()));
  // v_c = (-1, 2, 0) is outside the octant
  CHECK_FALSE(fan_is_subdivision_of(fan_1122(), octant()));
  // a single chamber does not fill gamma: the wall <a,d> cuts its interior
  const Fan half({"a", "e", "d"}, {{1, 0, 0}, {0, 0, 1}, {-2, 3, 0}}, {{0, 1, 2}});
  CHECK_FALSE(fan_is_subdivision_of(half, gamma_1122()));
}

TEST_CASE("wall relations reproduce the intersection numbers at (1,1,2,2)") {
  const Fan fan = fan_1122();

  const WallRelation be = wall_relation(fan, fan.wall("b", "e"));
  CHECK(be.intersection_numbers.at("b") == -2);  // -x1
  CHECK(be.intersection_numbers.at("e") == 0);
  CHECK(be.intersection_numbers.at("a") == 1);
  CHECK(be.intersection_numbers.at("c") == 1);
  CHECK(be.intersection_numbers.at("d") == 0);

  const WallRelation bc = wall_relation(fan, fan.wall("b", "c"));
  CHECK(bc.intersection_numbers.at("b") == -1);  // -d2
  CHECK(bc.intersection_numbers.at("c") == -1);  // -d1
  CHECK(bc.intersection_numbers.at("e") == 1);
  CHECK(bc.intersection_numbers.at("f") == 1);

  const WallRelation ce = wall_relation(fan, fan.wall("c", "e"));
  CHECK(ce.intersection_numbers.at("c") == -2);  // -x2
  CHECK(ce.intersection_numbers.at("b") == 1);
  CHECK(ce.intersection_numbers.at("d") == 1);
}

TEST_CASE("wall relation coefficients reconstruct the zero vector") {
  for (long d1 = 1; d1 <= 3; ++d1)
    for (long d2 = 1; d2 <= 3; ++d2)
      for (long x1 = 1; x1 <= 3; ++x1)
        for (long x2 = 1; x2 <= 3; ++x2) {
          const Fan fan({"a", "b", "c", "d", "e", "f"},
                        {{1, 0, 0},
                         {0, 1, 0},
                         {-1, x1, 0},
                         {-x2, x1 * x2 - 1, 0},
                         {0, 0, 1},
                         {-d1, d2 + d1 * x1, -1}},
                        {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 1, 5}, {1, 2, 5}, {2, 3, 5}});
          for (const auto& [n1, n2] : std::vector<std::pair<const char*, const char*>>{
                   {"a", "b"}, {"b", "c"}, {"c", "d"}, {"b", "e"}, {"c", "e"},
                   {"b", "f"}, {"c", "f"}}) {
            const WallRelation rel = wall_relation(fan, fan.wall(n1, n2));
            const LatticeVector residue = fan.ray(rel.opposite1) + fan.ray(rel.opposite2) +
                                          rel.coeff1 * fan.ray(rel.wall_ray1) +
                                          rel.coeff2 * fan.ray(rel.wall_ray2);
            CHECK(residue.is_zero());
          }
        }
}

TEST_CASE("wall relation rejects non-interior walls") {
  const Fan fan = fan_1122();
  CHECK_THROWS_AS(wall_relation(fan, fan.wall("a", "e")), DomainError);  // boundary
  CHECK_THROWS_AS(wall_relation(fan, fan.wall("e", "f")), DomainError);  // not a wall
  CHECK_THROWS_AS(wall_relation(fan, Cone({LatticeVector{5, 1, 1}, e2}, 3)), DomainError);
}

TEST_CASE("wall relation detects a non-integral relation") {
  // (1,1,0) + (1,-1,0) span a sublattice of index 2; the opposite rays sit
  // at half-integer coordinates in that basis.
  const Fan fan({"p", "q", "r", "s"},
                {{1, 1, 0}, {1, -1, 0}, {0, 0, 1}, {1, 0, -1}},
                {{0, 1, 2}, {0, 1, 3}});
  CHECK_THROWS_AS(wall_relation(fan, fan.wall("p", "q")), InternalError);
}
