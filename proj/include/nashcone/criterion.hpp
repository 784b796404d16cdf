// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors
//
// The certifier. Given the components of an exceptional divisor and curve
// classes generating the closed cone of curves of each component, it
// searches for effective divisors with full support whose negatives are
// ample on every component, and derives essentiality / Nash-bijectivity
// verdicts from them. Verdicts are one-directional: the engine answers
// "certified" or "undetermined", never "not essential".

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nashcone/errors.hpp"
#include "nashcone/numeric.hpp"

namespace nashcone {

/// The class of an effective curve with its intersection numbers against
/// every exceptional component. `component` optionally names the component
/// whose cone of curves this class helps generate.
struct CurveClass {
  std::string name;
  std::optional<std::string> component;
  std::vector<Int> intersections;
};

/// Intersection data of a divisorial resolution: named exceptional
/// components E_1..E_n and curve classes assumed to generate the closed
/// cone of curves of each component (the caller's responsibility; it is
/// not decidable from this data).
class ResolutionData {
 public:
  ResolutionData(std::vector<std::string> components, std::vector<CurveClass> curves);

  std::size_t component_count() const noexcept { return components_.size(); }
  const std::vector<std::string>& components() const noexcept { return components_; }
  const std::vector<CurveClass>& curves() const noexcept { return curves_; }
  std::size_t component_index(std::string_view name) const;

 private:
  std::vector<std::string> components_;
  std::vector<CurveClass> curves_;
};

/// An effective integral divisor supported on the exceptional set, as its
/// coefficient vector (a_1, ..., a_n) >= 0. "Full support" means a_k >= 1
/// for every k.
class ExceptionalDivisor {
 public:
  explicit ExceptionalDivisor(std::vector<Int> coeffs);
  ExceptionalDivisor(std::initializer_list<long long> coeffs);

  std::size_t size() const noexcept { return coeffs_.size(); }
  const Int& operator[](std::size_t k) const { return coeffs_.at(k); }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  bool full_support() const noexcept;
  Int coefficient_sum() const;

  bool operator==(const ExceptionalDivisor&) const = default;

  std::string str() const;  // "(a1, ..., an)"

  friend ExceptionalDivisor operator+(const ExceptionalDivisor&, const ExceptionalDivisor&);
  friend ExceptionalDivisor operator*(const Int& k, const ExceptionalDivisor&);

 private:
  std::vector<Int> coeffs_;
};

/// True iff F.z = sum_k a_k (z . E_k) < 0 for every listed curve class z,
/// which certifies that O(-F) restricts amply to the union of components.
/// F must have full support.
bool kleiman_check(const ResolutionData& data, const ExceptionalDivisor& divisor);

/// Searches for a full-support integral divisor passing kleiman_check, i.e.
/// a contractibility certificate for the exceptional set. Returns the
/// canonical witness (minimal coefficient sum, ties broken
/// lexicographically) or nothing when the system is infeasible.
std::optional<ExceptionalDivisor> find_grauert_certificate(const ResolutionData& data);

/// Searches for a certificate with the additional ordering a_i < a_j.
/// Canonicalized as above.
std::optional<ExceptionalDivisor> find_f_ij(const ResolutionData& data, std::size_t i,
                                            std::size_t j);

struct EssentialityVerdict {
  bool certified = false;
  /// j -> F_ij for the pairs that succeeded (all j != i when certified).
  std::map<std::size_t, ExceptionalDivisor> certificates;
};

/// Component i is certified essential when find_f_ij succeeds for every
/// j != i. A single component is certified vacuously.
EssentialityVerdict certify_essential(const ResolutionData& data, std::size_t i);

struct NashVerdict {
  bool certified = false;
  std::vector<EssentialityVerdict> per_component;
};

/// Certified iff every component is certified essential; then the
/// components are precisely the essential components and the Nash map of
/// the contracted germ is bijective.
NashVerdict certify_nash_bijective(const ResolutionData& data);

/// Cross-checks the elimination-based feasibility answers against direct
/// enumeration of coefficient vectors in [1..bound]^n (n <= 3 only; larger
/// data is skipped). On a mismatch returns false and describes it in
/// `detail`. The enumeration can only confirm feasibility for witnesses
/// inside the box, so a feasible system whose canonical witness sticks out
/// of the box is not counted as a mismatch.
bool brute_force_cross_check(const ResolutionData& data, long bound, std::string* detail);

}  // namespace nashcone
