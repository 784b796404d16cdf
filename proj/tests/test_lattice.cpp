// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nashcone/lattice.hpp"

using namespace nashcone;

namespace {

// Independent determinant oracle: plain cofactor expansion along the first
// row. Deliberately separate from the Bareiss path under test.
Int det_cofactor(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Int acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const Int term = m[0][j] * det_cofactor(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

Int det_cofactor(const std::vector<LatticeVector>& rows) {
  std::vector<std::vector<Int>> m;
  for (const auto& r : rows) m.push_back(r.coords());
  return det_cofactor(m);
}

}  // namespace

TEST_CASE("pairing computes the exact dual product") {
  CHECK(pairing(LinearForm{1, 0, 0}, LatticeVector{7, -3, 2}) == 7);
  // (m, v_f) = d1 + x2 d2 at d1 = d2 = 1, x2 = 2, with m = (x1 x2 - 1, x2, 0)
  CHECK(pairing(LinearForm{3, 2, 0}, LatticeVector{-1, 3, -1}) == 3);
  CHECK(pairing(LinearForm{0, 0, 0}, LatticeVector{11, -4, 9}) == 0);
}

TEST_CASE("pairing rejects mismatched dimensions") {
  CHECK_THROWS_AS(pairing(LinearForm{1, 2}, LatticeVector{1, 2, 3}), StructuralError);
}

TEST_CASE("pairing is bilinear") {
  std::mt19937 rng(20260809);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Int> mc(3), vc(3), wc(3);
    for (int k = 0; k < 3; ++k) {
      mc[k] = coeff(rng);
      vc[k] = coeff(rng);
      wc[k] = coeff(rng);
    }
    const LinearForm m(mc);
    const LatticeVector v(vc), w(wc);
    const Int a = coeff(rng), b = coeff(rng);
    CHECK(pairing(m, a * v + b * w) == a * pairing(m, v) + b * pairing(m, w));
  }
}

TEST_CASE("det on pinned examples") {
  const LatticeVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  CHECK(det({e1, e2, e3}) == 1);
  // the cone <b,c,e> at x1 = 2
  const std::vector<LatticeVector> bce{{0, 1, 0}, {-1, 2, 0}, {0, 0, 1}};
  CHECK(det_cofactor(bce) == 1);
  CHECK(det(bce) == 1);
  CHECK(det({e1, e1, e2}) == 0);
}

TEST_CASE("det matches the cofactor oracle on random matrices") {
  std::mt19937 rng(987123);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<LatticeVector> rows;
      for (int r = 0; r < n; ++r) {
        std::vector<Int> row(n);
        for (int c = 0; c < n; ++c) row[c] = entry(rng);
        rows.emplace_back(row);
      }
      CHECK(det(rows) == det_cofactor(rows));
    }
  }
}

TEST_CASE("det is antisymmetric under swaps") {
  std::mt19937 rng(5461);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<LatticeVector> rows;
    for (int r = 0; r < 3; ++r) {
      std::vector<Int> row(3);
      for (int c = 0; c < 3; ++c) row[c] = entry(rng);
      rows.emplace_back(row);
    }
    auto swapped = rows;
    std::swap(swapped[0], swapped[2]);
    CHECK(det(swapped) == -det(rows));
  }
}

TEST_CASE("det of a permuted identity is a unit") {
  const LatticeVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  CHECK(det({e2, e1, e3}) == -1);
  CHECK(det({e3, e1, e2}) == 1);
}

TEST_CASE("det rejects non-square input") {
  CHECK_THROWS_AS(det({LatticeVector{1, 2, 3}, LatticeVector{4, 5, 6}}), StructuralError);
  CHECK_THROWS_AS(det({}), StructuralError);
}

TEST_CASE("primitive divides by the gcd") {
  CHECK(primitive(LatticeVector{2, 4, -6}) == LatticeVector{1, 2, -3});
  CHECK(primitive(LatticeVector{-1, 2, 0}) == LatticeVector{-1, 2, 0});
  CHECK(primitive(LatticeVector{0, 0, 5}) == LatticeVector{0, 0, 1});
  CHECK_THROWS_AS(primitive(LatticeVector{0, 0, 0}), DomainError);
}

TEST_CASE("primitive is scale invariant") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> entry(-8, 8);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Int> row(3);
    for (int c = 0; c < 3; ++c) row[c] = entry(rng);
    const LatticeVector v(row);
    if (v.is_zero()) continue;
    for (Int k = 1; k <= 5; ++k) CHECK(primitive(k * v) == primitive(v));
  }
}

TEST_CASE("solve_in_basis on pinned examples") {
  const LatticeVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  CHECK(solve_in_basis({e1, e2, e3}, LatticeVector{-1, 2, 0}) ==
        std::vector<Rat>{-1, 2, 0});
  // v_d = -x2 v_a + (x1 x2 - 1) v_b at x1 = x2 = 2, basis (v_a, v_b, v_e) standard
  CHECK(solve_in_basis({e1, e2, e3}, LatticeVector{-2, 3, 0}) ==
        std::vector<Rat>{-2, 3, 0});
  CHECK(solve_in_basis({LatticeVector{2, 0, 0}, e2, e3}, LatticeVector{1, 0, 0}) ==
        std::vector<Rat>{Rat(1, 2), 0, 0});
  CHECK_THROWS_AS(solve_in_basis({e1, e2, e1 + e2}, LatticeVector{1, 1, 1}), DomainError);
}

TEST_CASE("solve_in_basis recombines to the target") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> entry(-7, 7);
  int solved = 0;
  for (int trial = 0; trial < 80 && solved < 40; ++trial) {
    std::vector<LatticeVector> basis;
    for (int r = 0; r < 3; ++r) {
      std::vector<Int> row(3);
      for (int c = 0; c < 3; ++c) row[c] = entry(rng);
      basis.emplace_back(row);
    }
    if (det(basis) == 0) continue;
    std::vector<Int> tc(3);
    for (int c = 0; c < 3; ++c) tc[c] = entry(rng);
    const LatticeVector target(tc);
    const std::vector<Rat> coeffs = solve_in_basis(basis, target);
    for (int k = 0; k < 3; ++k) {
      Rat acc = 0;
      for (int i = 0; i < 3; ++i) acc += coeffs[i] * Rat(basis[i][k]);
      CHECK(acc == Rat(target[k]));
    }
    ++solved;
  }
  CHECK(solved == 40);
}

TEST_CASE("same_ray identifies positive multiples only") {
  CHECK(same_ray(LatticeVector{2, 4, 0}, LatticeVector{1, 2, 0}));
  CHECK_FALSE(same_ray(LatticeVector{1, 2, 0}, LatticeVector{-1, -2, 0}));
  CHECK_FALSE(same_ray(LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0}));
}
