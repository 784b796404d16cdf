// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors
//
// Exact rational linear feasibility by Fourier-Motzkin elimination. The
// systems decided here are small (variables = cone edges or exceptional
// components, a handful of each), so elimination blowup is a non-issue.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nashcone/numeric.hpp"

namespace nashcone {

/// One row of a linear system: coeffs . x <= bound.
struct LinearConstraint {
  std::vector<Int> coeffs;
  Int bound;
};

/// A conjunction of integer-coefficient linear constraints over rational
/// variables. All relations are stored in "<=" form.
class FeasibilitySystem {
 public:
  explicit FeasibilitySystem(std::size_t nvars);

  void add_upper(std::vector<Int> coeffs, Int bound);  // coeffs.x <= bound
  void add_lower(std::vector<Int> coeffs, Int bound);  // coeffs.x >= bound
  void add_equal(std::vector<Int> coeffs, Int value);  // coeffs.x == value

  std::size_t variable_count() const noexcept { return nvars_; }
  const std::vector<LinearConstraint>& rows() const noexcept { return rows_; }

 private:
  std::size_t nvars_;
  std::vector<LinearConstraint> rows_;
};

/// Decides the system exactly and, when it is feasible, returns one rational
/// solution reconstructed by back-substitution through the elimination
/// stages. Deterministic: identical systems yield identical points.
std::optional<std::vector<Rat>> feasible_point(const FeasibilitySystem& system);

/// Feasibility only (same algorithm, no sample).
bool is_feasible(const FeasibilitySystem& system);

}  // namespace nashcone
