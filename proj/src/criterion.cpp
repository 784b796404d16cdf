// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors

#include "nashcone/criterion.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nashcone/feasibility.hpp"

namespace nashcone {

ResolutionData::ResolutionData(std::vector<std::string> components,
                               std::vector<CurveClass> curves)
    : components_(std::move(components)), curves_(std::move(curves)) {
  if (components_.empty())
    throw StructuralError("resolution data: at least one component required");
  std::set<std::string> names;
  for (const auto& c : components_) {
    if (c.empty()) throw StructuralError("resolution data: empty component name");
    if (!names.insert(c).second)
      throw StructuralError("resolution data: duplicate component name " + c);
  }
  if (curves_.empty())
    throw StructuralError("resolution data: at least one curve class required");
  std::set<std::string> curve_names;
  bool any_labeled = false;
  std::set<std::string> labeled_components;
  for (const auto& z : curves_) {
    if (z.name.empty()) throw StructuralError("resolution data: empty curve name");
    if (!curve_names.insert(z.name).second)
      throw StructuralError("resolution data: duplicate curve name " + z.name);
    if (z.intersections.size() != components_.size())
      throw StructuralError("resolution data: curve " + z.name + " has " +
                            std::to_string(z.intersections.size()) +
                            " intersection numbers, expected " +
                            std::to_string(components_.size()));
    if (z.component) {
      if (!names.count(*z.component))
        throw StructuralError("resolution data: curve " + z.name +
                              " names unknown component " + *z.component);
      any_labeled = true;
      labeled_components.insert(*z.component);
    }
  }
  // When curves carry component labels, every component must own at least
  // one generator; with no labels at all we cannot attribute curves and the
  // caller carries the burden.
  if (any_labeled) {
    for (const auto& c : components_)
      if (!labeled_components.count(c))
        throw StructuralError("resolution data: no curve is labeled with component " + c);
  }
}

std::size_t ResolutionData::component_index(std::string_view name) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i] == name) return i;
  throw StructuralError("resolution data: unknown component " + std::string(name));
}

ExceptionalDivisor::ExceptionalDivisor(std::vector<Int> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw StructuralError("exceptional divisor: empty coefficient vector");
  for (const Int& a : coeffs_)
    if (a < 0)
      throw DomainError("exceptional divisor: coefficients must be nonnegative");
}

ExceptionalDivisor::ExceptionalDivisor(std::initializer_list<long long> coeffs)
    : ExceptionalDivisor(std::vector<Int>(coeffs.begin(), coeffs.end())) {}

bool ExceptionalDivisor::full_support() const noexcept {
  for (const Int& a : coeffs_)
    if (a < 1) return false;
  return true;
}

Int ExceptionalDivisor::coefficient_sum() const {
  Int s = 0;
  for (const Int& a : coeffs_) s += a;
  return s;
}

std::string ExceptionalDivisor::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i];
  }
  os << ')';
  return os.str();
}

ExceptionalDivisor operator+(const ExceptionalDivisor& a, const ExceptionalDivisor& b) {
  if (a.size() != b.size())
    throw StructuralError("divisor sum: coefficient length mismatch");
  std::vector<Int> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return ExceptionalDivisor(std::move(out));
}

ExceptionalDivisor operator*(const Int& k, const ExceptionalDivisor& d) {
  if (k < 0) throw DomainError("divisor scaling: factor must be nonnegative");
  std::vector<Int> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = k * d[i];
  return ExceptionalDivisor(std::move(out));
}

bool kleiman_check(const ResolutionData& data, const ExceptionalDivisor& divisor) {
  if (divisor.size() != data.component_count())
    throw StructuralError("kleiman check: coefficient length mismatch (" +
                          std::to_string(divisor.size()) + " vs " +
                          std::to_string(data.component_count()) + " components)");
  if (!divisor.full_support())
    throw DomainError("kleiman check: divisor must have full support (all "
                      "coefficients >= 1)");
  for (const auto& z : data.curves()) {
    Int product = 0;
    for (std::size_t k = 0; k < divisor.size(); ++k)
      product += divisor[k] * z.intersections[k];
    if (product >= 0) return false;
  }
  return true;
}

namespace {

using OrderPair = std::optional<std::pair<std::size_t, std::size_t>>;

// Closed integer form of the certificate constraints. On integers it is
// equivalent to the strict system {a_k > 0, F.z < 0, a_i < a_j}, and the
// underlying strict system is a rational cone, so rational feasibility of
// this closed form coincides with integer feasibility.
std::vector<LinearConstraint> certificate_rows(const ResolutionData& data,
                                               const OrderPair& order) {
  const std::size_t n = data.component_count();
  std::vector<LinearConstraint> rows;
  for (std::size_t k = 0; k < n; ++k) {
    LinearConstraint r{std::vector<Int>(n, 0), Int(-1)};
    r.coeffs[k] = -1;  // -a_k <= -1
    rows.push_back(std::move(r));
  }
  for (const auto& z : data.curves())
    rows.push_back({z.intersections, Int(-1)});
  if (order) {
    LinearConstraint r{std::vector<Int>(n, 0), Int(-1)};
    r.coeffs[order->first] = 1;
    r.coeffs[order->second] = -1;  // a_i - a_j <= -1
    rows.push_back(std::move(r));
  }
  return rows;
}

FeasibilitySystem to_system(const std::vector<LinearConstraint>& rows, std::size_t n) {
  FeasibilitySystem sys(n);
  for (const auto& r : rows) sys.add_upper(r.coeffs, r.bound);
  return sys;
}

bool point_satisfies(const std::vector<LinearConstraint>& rows,
                     const std::vector<Int>& point) {
  for (const auto& r : rows) {
    Int lhs = 0;
    for (std::size_t k = 0; k < point.size(); ++k) lhs += r.coeffs[k] * point[k];
    if (lhs > r.bound) return false;
  }
  return true;
}

// Rational feasibility of the rows with the first `prefix.size()` variables
// pinned and the remaining ones constrained to sum to `rest`.
bool feasible_with_prefix(const std::vector<LinearConstraint>& rows, std::size_t n,
                          const std::vector<Int>& prefix, const Int& rest) {
  const std::size_t fixed = prefix.size();
  const std::size_t m = n - fixed;
  FeasibilitySystem sys(m);
  for (const auto& r : rows) {
    Int bound = r.bound;
    for (std::size_t k = 0; k < fixed; ++k) bound -= r.coeffs[k] * prefix[k];
    std::vector<Int> tail(r.coeffs.begin() + static_cast<std::ptrdiff_t>(fixed),
                          r.coeffs.end());
    if (std::all_of(tail.begin(), tail.end(), [](const Int& c) { return c == 0; })) {
      if (bound < 0) return false;
      continue;
    }
    sys.add_upper(std::move(tail), std::move(bound));
  }
  sys.add_equal(std::vector<Int>(m, 1), rest);
  return is_feasible(sys);
}

// Depth-first search for the lexicographically first integer point with
// coordinate sum `total`. Subtrees are pruned by exact rational
// feasibility, which never discards an integer solution.
bool search_at_sum(const std::vector<LinearConstraint>& rows, std::size_t n,
                   const Int& total, std::vector<Int>& point) {
  const std::size_t level = point.size();
  Int used = 0;
  for (const Int& v : point) used += v;
  if (level == n - 1) {
    point.push_back(total - used);
    if (point.back() >= 1 && point_satisfies(rows, point)) return true;
    point.pop_back();
    return false;
  }
  const Int remaining_mins = Int(n - level - 1);  // later coordinates are >= 1 each
  for (Int a = 1; a <= total - used - remaining_mins; ++a) {
    point.push_back(a);
    if (feasible_with_prefix(rows, n, point, total - used - a) &&
        search_at_sum(rows, n, total, point))
      return true;
    point.pop_back();
  }
  return false;
}

std::optional<ExceptionalDivisor> minimal_certificate(const ResolutionData& data,
                                                      const OrderPair& order) {
  const std::size_t n = data.component_count();
  const std::vector<LinearConstraint> rows = certificate_rows(data, order);
  const auto sample = feasible_point(to_system(rows, n));
  if (!sample) return std::nullopt;

  // Clear denominators: the strict system is a cone, so the scaled sample
  // is an integer witness and caps the canonical search.
  Int den = 1;
  for (const Rat& r : *sample) den = lcm(den, denominator(r));
  Int cap = 0;
  for (const Rat& r : *sample) cap += numerator(r) * (den / denominator(r));

  for (Int s = Int(n); s <= cap; ++s) {
    std::vector<Int> point;
    point.reserve(n);
    if (search_at_sum(rows, n, s, point)) return ExceptionalDivisor(std::move(point));
  }
  throw InternalError("certificate search: scaled witness not recovered");
}

}  // namespace

std::optional<ExceptionalDivisor> find_grauert_certificate(const ResolutionData& data) {
  return minimal_certificate(data, std::nullopt);
}

std::optional<ExceptionalDivisor> find_f_ij(const ResolutionData& data, std::size_t i,
                                            std::size_t j) {
  if (i >= data.component_count() || j >= data.component_count())
    throw StructuralError("find_f_ij: component index out of range");
  if (i == j) throw DomainError("find_f_ij: the two components must differ");
  return minimal_certificate(data, std::make_pair(i, j));
}

EssentialityVerdict certify_essential(const ResolutionData& data, std::size_t i) {
  if (i >= data.component_count())
    throw StructuralError("certify_essential: component index out of range");
  EssentialityVerdict verdict;
  verdict.certified = true;
  for (std::size_t j = 0; j < data.component_count(); ++j) {
    if (j == i) continue;
    if (auto cert = find_f_ij(data, i, j))
      verdict.certificates.emplace(j, std::move(*cert));
    else
      verdict.certified = false;
  }
  return verdict;
}

NashVerdict certify_nash_bijective(const ResolutionData& data) {
  NashVerdict verdict;
  verdict.certified = true;
  for (std::size_t i = 0; i < data.component_count(); ++i) {
    verdict.per_component.push_back(certify_essential(data, i));
    verdict.certified = verdict.certified && verdict.per_component.back().certified;
  }
  return verdict;
}

namespace {

// Direct enumeration oracle over [1..bound]^n against the strict system.
std::optional<std::vector<Int>> brute_force_witness(const ResolutionData& data,
                                                    const OrderPair& order, long bound) {
  const std::size_t n = data.component_count();
  const std::vector<LinearConstraint> rows = certificate_rows(data, order);
  std::vector<Int> point(n, 1);
  while (true) {
    if (point_satisfies(rows, point)) return point;
    std::size_t k = n;
    while (k-- > 0) {
      if (point[k] < bound) {
        ++point[k];
        for (std::size_t t = k + 1; t < n; ++t) point[t] = 1;
        break;
      }
      if (k == 0) return std::nullopt;
    }
  }
}

bool check_one(const ResolutionData& data, const OrderPair& order, long bound,
               const char* label, std::string* detail) {
  const auto solved = order ? find_f_ij(data, order->first, order->second)
                            : find_grauert_certificate(data);
  const auto brute = brute_force_witness(data, order, bound);
  if (solved.has_value() && !brute.has_value()) {
    // Only a genuine mismatch when the canonical witness fits in the box.
    bool inside = true;
    for (const Int& a : solved->coeffs()) inside = inside && a <= bound;
    if (inside) {
      if (detail)
        *detail = std::string(label) + ": elimination found " + solved->str() +
                  " inside the box but enumeration found nothing";
      return false;
    }
    return true;
  }
  if (!solved.has_value() && brute.has_value()) {
    if (detail) {
      std::ostringstream os;
      os << label << ": enumeration found (";
      for (std::size_t k = 0; k < brute->size(); ++k)
        os << (k ? ", " : "") << (*brute)[k];
      os << ") but elimination reported infeasible";
      *detail = os.str();
    }
    return false;
  }
  return true;
}

}  // namespace

bool brute_force_cross_check(const ResolutionData& data, long bound, std::string* detail) {
  if (bound < 1) throw DomainError("brute-force cross-check: bound must be >= 1");
  if (data.component_count() > 3) {
    if (detail) *detail = "skipped: enumeration is limited to 3 components";
    return true;
  }
  if (!check_one(data, std::nullopt, bound, "full-support certificate", detail))
    return false;
  for (std::size_t i = 0; i < data.component_count(); ++i)
    for (std::size_t j = 0; j < data.component_count(); ++j) {
      if (i == j) continue;
      std::ostringstream label;
      label << "ordered certificate (" << data.components()[i] << " < "
            << data.components()[j] << ")";
      if (!check_one(data, std::make_pair(i, j), bound, label.str().c_str(), detail))
        return false;
    }
  if (detail) *detail = "all feasibility answers agree with enumeration";
  return true;
}

}  // namespace nashcone
