// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors
//
// The toric realization of a family germ over a rational base curve. The
// fan has rays a..f in a rank-3 lattice with
//     v_a = (1,0,0)   v_b = (0,1,0)   v_e = (0,0,1)
//     v_c = -v_a + x1 v_b
//     v_d = -x2 v_a + (x1 x2 - 1) v_b
//     v_f = -d1 v_a + (d2 + d1 x1) v_b - v_e
// and six regular maximal cones around the coplanar chain a,b,c,d. It
// subdivides the strictly convex cone gamma = <a,e,d,f> exactly when
// x1 x2 > 1, and the affine toric variety of gamma is the contracted germ
// when the base curve is rational.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nashcone/cone.hpp"
#include "nashcone/family.hpp"

namespace nashcone {

struct ToricModel {
  Fan fan;                   // rays a, b, c, d, e, f
  Cone gamma;                // <a, e, d, f>
  LinearForm convexity_form;  // vanishes on d and e, positive on a and f
};

/// Builds and verifies the model: all six maximal cones regular, gamma
/// strictly convex, fan a subdivision of gamma. Requires x1 x2 > 1; for
/// x1 = x2 = 1 the would-be gamma contains the line through a and d.
ToricModel build_fan(const FamilyParams& params);

/// Coefficients of the principal divisor of the character of m: the ray l
/// receives (m, v_l).
std::map<std::string, Int> character_divisor(const ToricModel& model, const LinearForm& m);

/// One comparison of a wall-relation intersection number with its expected
/// value from the abstract family rows.
struct IntersectionCheckRow {
  std::string wall;  // e.g. "<b,c>"
  std::string ray;   // e.g. "b"
  Int computed;
  Int expected;
};

struct IntersectionCheck {
  bool ok = false;
  std::vector<IntersectionCheckRow> rows;
};

/// Recomputes, via wall relations, the intersection numbers of the curves
/// V<b,c>, V<b,e>, V<c,e> against the surfaces V_b, V_c and compares them
/// with (-d2, -d1, -x1, -x2) plus the two smoothness-forced 1s. These are
/// exactly the abstract family rows, so this ties the toric model to the
/// glued construction.
IntersectionCheck verify_intersection_table(const ToricModel& model,
                                            const FamilyParams& params);

/// Evaluates the convexity form on the edges of gamma: returns
/// ((m, v_a), (m, v_f)) = (x1 x2 - 1, d1 + x2 d2) after verifying both are
/// positive and that m vanishes on v_d and v_e. Any failure is an
/// InternalError.
std::pair<Int, Int> convexity_certificate(const ToricModel& model,
                                          const FamilyParams& params);

struct ToricityReport {
  bool is_toric = false;                   // genus 0 exactly
  std::optional<Cone> gamma;               // attached when toric
  std::array<Int, 2> smooth_representatives;  // {genus, genus}
  std::string distinguishing_note;
};

/// The analytic-invariant report of a contractible family germ. The
/// multiset of smooth representatives of the essential divisors is {g, g}
/// independently of the resolution; germs over non-isomorphic base curves
/// are never analytically isomorphic, and a toric model exists exactly for
/// genus 0. Requires x1 x2 > 1 (otherwise no germ is produced).
ToricityReport toricity_report(const FamilyParams& params);

}  // namespace nashcone
