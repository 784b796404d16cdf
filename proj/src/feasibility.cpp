// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors

#include "nashcone/feasibility.hpp"

#include <algorithm>

#include "nashcone/errors.hpp"

namespace nashcone {

FeasibilitySystem::FeasibilitySystem(std::size_t nvars) : nvars_(nvars) {}

void FeasibilitySystem::add_upper(std::vector<Int> coeffs, Int bound) {
  if (coeffs.size() != nvars_)
    throw StructuralError("feasibility: constraint arity mismatch");
  rows_.push_back({std::move(coeffs), std::move(bound)});
}

void FeasibilitySystem::add_lower(std::vector<Int> coeffs, Int bound) {
  for (Int& c : coeffs) c = -c;
  add_upper(std::move(coeffs), -bound);
}

void FeasibilitySystem::add_equal(std::vector<Int> coeffs, Int value) {
  add_upper(coeffs, value);
  add_lower(std::move(coeffs), std::move(value));
}

namespace {

// Scales a row down by the gcd of all its entries including the bound;
// a positive common factor preserves the solution set exactly.
void normalize_row(LinearConstraint& row) {
  Int g = abs(row.bound);
  for (const Int& c : row.coeffs) g = gcd(g, abs(c));
  if (g > 1) {
    for (Int& c : row.coeffs) c /= g;
    row.bound /= g;
  }
}

bool row_less(const LinearConstraint& a, const LinearConstraint& b) {
  if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
  return a.bound < b.bound;
}

bool row_eq(const LinearConstraint& a, const LinearConstraint& b) {
  return a.coeffs == b.coeffs && a.bound == b.bound;
}

void dedup(std::vector<LinearConstraint>& rows) {
  std::sort(rows.begin(), rows.end(), row_less);
  rows.erase(std::unique(rows.begin(), rows.end(), row_eq), rows.end());
}

// Eliminates variable `var`, combining every upper bound with every lower
// bound at positive integer weights so all rows stay integral.
std::vector<LinearConstraint> eliminate(const std::vector<LinearConstraint>& rows,
                                        std::size_t var) {
  std::vector<LinearConstraint> out;
  std::vector<const LinearConstraint*> pos, neg;
  for (const auto& r : rows) {
    const int s = sign(r.coeffs[var]);
    if (s > 0) {
      pos.push_back(&r);
    } else if (s < 0) {
      neg.push_back(&r);
    } else {
      out.push_back(r);
    }
  }
  for (const auto* p : pos) {
    for (const auto* n : neg) {
      const Int wp = -n->coeffs[var];  // > 0
      const Int wn = p->coeffs[var];   // > 0
      LinearConstraint combined;
      combined.coeffs.resize(p->coeffs.size());
      for (std::size_t j = 0; j < p->coeffs.size(); ++j)
        combined.coeffs[j] = wp * p->coeffs[j] + wn * n->coeffs[j];
      combined.bound = wp * p->bound + wn * n->bound;
      normalize_row(combined);
      out.push_back(std::move(combined));
    }
  }
  dedup(out);
  return out;
}

bool ground_consistent(const std::vector<LinearConstraint>& rows) {
  for (const auto& r : rows) {
    bool all_zero = true;
    for (const Int& c : r.coeffs)
      if (c != 0) {
        all_zero = false;
        break;
      }
    if (all_zero && r.bound < 0) return false;
  }
  return true;
}

// Tight rational bounds on variable `var` given values of variables < var;
// rows must only involve variables <= var.
struct Interval {
  std::optional<Rat> lo, hi;
};

Interval bounds_for(const std::vector<LinearConstraint>& rows, std::size_t var,
                    const std::vector<Rat>& fixed) {
  Interval iv;
  for (const auto& r : rows) {
    if (r.coeffs[var] == 0) continue;
    Rat rest = r.bound;
    for (std::size_t j = 0; j < var; ++j)
      if (r.coeffs[j] != 0) rest -= Rat(r.coeffs[j]) * fixed[j];
    Rat limit = rest / Rat(r.coeffs[var]);
    if (r.coeffs[var] > 0) {
      if (!iv.hi || limit < *iv.hi) iv.hi = limit;
    } else {
      if (!iv.lo || limit > *iv.lo) iv.lo = limit;
    }
  }
  return iv;
}

}  // namespace

std::optional<std::vector<Rat>> feasible_point(const FeasibilitySystem& system) {
  const std::size_t n = system.variable_count();
  std::vector<LinearConstraint> current = system.rows();
  for (auto& r : current) normalize_row(r);
  dedup(current);

  // stages[k] involves variables 0..k only.
  std::vector<std::vector<LinearConstraint>> stages(n);
  for (std::size_t k = n; k-- > 0;) {
    stages[k] = current;
    current = eliminate(current, k);
  }
  if (!ground_consistent(current)) return std::nullopt;

  std::vector<Rat> point(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Interval iv = bounds_for(stages[k], k, point);
    // Fourier-Motzkin guarantees lo <= hi here; the system is closed, so
    // endpoints are attained.
    if (iv.lo && iv.hi) {
      point[k] = (*iv.lo + *iv.hi) / 2;
    } else if (iv.lo) {
      point[k] = *iv.lo;
    } else if (iv.hi) {
      point[k] = *iv.hi;
    } else {
      point[k] = 0;
    }
  }
  return point;
}

bool is_feasible(const FeasibilitySystem& system) {
  std::vector<LinearConstraint> current = system.rows();
  for (auto& r : current) normalize_row(r);
  dedup(current);
  for (std::size_t k = system.variable_count(); k-- > 0;)
    current = eliminate(current, k);
  return ground_consistent(current);
}

}  // namespace nashcone
