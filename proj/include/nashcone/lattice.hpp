// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors
//
// Exact integer lattice arithmetic: vectors in a weight lattice N, forms in
// the dual lattice M, pairings, determinants and primitive generators.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "nashcone/errors.hpp"
#include "nashcone/numeric.hpp"

namespace nashcone {

/// A point of the lattice N, stored as exact integer coordinates in a fixed
/// basis. Immutable after construction.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Int> coords);
  LatticeVector(std::initializer_list<long long> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Int& operator[](std::size_t i) const { return coords_.at(i); }
  const std::vector<Int>& coords() const noexcept { return coords_; }
  bool is_zero() const noexcept;

  bool operator==(const LatticeVector&) const = default;

  /// Renders as "(c0, c1, ...)".
  std::string str() const;

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a);
  friend LatticeVector operator*(const Int& k, const LatticeVector& v);

 private:
  std::vector<Int> coords_;
};

/// An element of the dual lattice M = Hom(N, Z), stored in the dual basis.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::vector<Int> coeffs);
  LinearForm(std::initializer_list<long long> coeffs);

  std::size_t dim() const noexcept { return coeffs_.size(); }
  const Int& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

  bool operator==(const LinearForm&) const = default;

  std::string str() const;

  friend LinearForm operator+(const LinearForm& a, const LinearForm& b);
  friend LinearForm operator*(const Int& k, const LinearForm& m);

 private:
  std::vector<Int> coeffs_;
};

/// Exact dual pairing (m, v) = sum_i m_i v_i.
Int pairing(const LinearForm& m, const LatticeVector& v);

/// Determinant of the square matrix whose rows are the given vectors,
/// by fraction-free (Bareiss) elimination.
Int det(const std::vector<LatticeVector>& rows);

/// The unique primitive lattice vector on the ray of v: v divided by the
/// gcd of its coordinates. The zero vector spans no ray.
LatticeVector primitive(const LatticeVector& v);

/// Exact rational coordinates of `target` in `basis` (Cramer's rule).
std::vector<Rat> solve_in_basis(const std::vector<LatticeVector>& basis,
                                const LatticeVector& target);

/// True when a and b span the same ray, i.e. are positive rational
/// multiples of one another. Both must be nonzero.
bool same_ray(const LatticeVector& a, const LatticeVector& b);

}  // namespace nashcone
