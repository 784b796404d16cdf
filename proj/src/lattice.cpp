// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors

#include "nashcone/lattice.hpp"

#include <sstream>

namespace nashcone {

namespace {

std::vector<Int> to_ints(std::initializer_list<long long> values) {
  std::vector<Int> out;
  out.reserve(values.size());
  for (long long v : values) out.emplace_back(v);
  return out;
}

std::string render_tuple(const std::vector<Int>& values) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ", ";
    os << values[i];
  }
  os << ')';
  return os.str();
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw StructuralError(std::string(what) + ": dimension mismatch (" +
                          std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

LatticeVector::LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw StructuralError("lattice vector: dimension must be >= 1");
}

LatticeVector::LatticeVector(std::initializer_list<long long> coords)
    : LatticeVector(to_ints(coords)) {}

bool LatticeVector::is_zero() const noexcept {
  for (const Int& c : coords_)
    if (c != 0) return false;
  return true;
}

std::string LatticeVector::str() const { return render_tuple(coords_); }

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a.dim(), b.dim(), "vector sum");
  std::vector<Int> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a.coords_[i] + b.coords_[i];
  return LatticeVector(std::move(out));
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a.dim(), b.dim(), "vector difference");
  std::vector<Int> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a.coords_[i] - b.coords_[i];
  return LatticeVector(std::move(out));
}

LatticeVector operator-(const LatticeVector& a) { return Int(-1) * a; }

LatticeVector operator*(const Int& k, const LatticeVector& v) {
  std::vector<Int> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = k * v.coords_[i];
  return LatticeVector(std::move(out));
}

LinearForm::LinearForm(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw StructuralError("linear form: dimension must be >= 1");
}

LinearForm::LinearForm(std::initializer_list<long long> coeffs)
    : LinearForm(to_ints(coeffs)) {}

std::string LinearForm::str() const { return render_tuple(coeffs_); }

LinearForm operator+(const LinearForm& a, const LinearForm& b) {
  require_same_dim(a.dim(), b.dim(), "form sum");
  std::vector<Int> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a.coeffs_[i] + b.coeffs_[i];
  return LinearForm(std::move(out));
}

LinearForm operator*(const Int& k, const LinearForm& m) {
  std::vector<Int> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) out[i] = k * m.coeffs_[i];
  return LinearForm(std::move(out));
}

Int pairing(const LinearForm& m, const LatticeVector& v) {
  require_same_dim(m.dim(), v.dim(), "pairing");
  Int acc = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) acc += m[i] * v[i];
  return acc;
}

Int det(const std::vector<LatticeVector>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw StructuralError("det: empty input");
  for (const auto& r : rows) require_same_dim(r.dim(), n, "det");

  std::vector<std::vector<Int>> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = rows[i].coords();

  // Bareiss fraction-free elimination: every division below is exact.
  int sgn = 1;
  Int prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot_row = k;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (m[r][k] != 0) {
          pivot_row = r;
          break;
        }
      }
      if (pivot_row == k) return 0;
      std::swap(m[k], m[pivot_row]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev_pivot;
      }
      m[i][k] = 0;
    }
    prev_pivot = m[k][k];
  }
  return sgn * m[n - 1][n - 1];
}

LatticeVector primitive(const LatticeVector& v) {
  if (v.is_zero()) throw DomainError("primitive: the zero vector spans no ray");
  Int g = 0;
  for (const Int& c : v.coords()) g = gcd(g, abs(c));
  std::vector<Int> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i] / g;
  return LatticeVector(std::move(out));
}

std::vector<Rat> solve_in_basis(const std::vector<LatticeVector>& basis,
                                const LatticeVector& target) {
  const Int d = det(basis);
  if (d == 0) throw DomainError("solve_in_basis: singular basis");
  require_same_dim(target.dim(), basis.size(), "solve_in_basis");

  std::vector<Rat> coeffs(basis.size());
  std::vector<LatticeVector> replaced = basis;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    replaced[i] = target;
    coeffs[i] = Rat(det(replaced)) / Rat(d);  // d may be negative
    replaced[i] = basis[i];
  }
  return coeffs;
}

bool same_ray(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) return false;
  if (a.is_zero() || b.is_zero()) return false;
  return primitive(a) == primitive(b);
}

}  // namespace nashcone
