// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors
//
// The two-surface 3-fold families. A germ is built from a smooth projective
// base curve of genus g and two negative line bundles of degrees -d1, -d2
// by gluing twisted line-bundle total spaces over the compactified ruled
// surfaces S1, S2; only (g, d1, d2, x1, x2) enters any computation. The
// classifier derives contractibility and Nash verdicts twice, by the
// closed-form interval condition and by the certificate engine, and treats
// any disagreement as an internal error.

#pragma once

#include <optional>
#include <utility>

#include "nashcone/criterion.hpp"

namespace nashcone {

struct FamilyParams {
  Int genus;   // genus of the base curve, >= 0
  Int d1, d2;  // minus the degrees of the two line bundles, >= 1
  Int x1, x2;  // twists along the curves at infinity, >= 1

  FamilyParams(Int genus, Int d1, Int d2, Int x1, Int x2);
};

/// Intersection rows of the glued 3-fold against S1, S2. The cone of curves
/// of S_i is spanned by the central curve C = S1 ∩ S2 and the ruling fiber
/// F_i, giving curve classes
///     C  -> (-d2, -d1),   F1 -> (-x1, 1),   F2 -> (1, -x2).
ResolutionData make_resolution_data(const FamilyParams& params);

enum class IntervalKind { None, OneSided, TwoSided };

/// Integer solvability of 1/x1 < a1/a2 < x2, split by which coefficient is
/// smaller. The a1 < a2 side certifies S1, the a2 < a1 side certifies S2.
/// Witnesses are the smallest-coefficient-sum pairs, lexicographic on ties.
struct IntervalFeasibility {
  IntervalKind kind = IntervalKind::None;
  std::optional<std::pair<Int, Int>> witness_a1_lt_a2;
  std::optional<std::pair<Int, Int>> witness_a2_lt_a1;
};

IntervalFeasibility interval_feasibility(const FamilyParams& params);

struct FamilyClassification {
  FamilyParams params;
  bool contractible = false;  // <=> x1 x2 > 1 <=> the open interval is nonempty
  std::optional<ExceptionalDivisor> grauert_certificate{};
  Rat interval_lower{};  // 1/x1
  Int interval_upper{};  // x2
  IntervalFeasibility interval{};
  NashVerdict nash{};  // engine verdicts, already cross-checked
};

/// Classifies the family at `params`. Every closed-form answer is compared
/// with the engine's answer on make_resolution_data; a disagreement throws
/// InternalError rather than being resolved silently.
FamilyClassification classify(const FamilyParams& params);

}  // namespace nashcone
