// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors

#include "nashcone/family.hpp"

#include <sstream>

namespace nashcone {

FamilyParams::FamilyParams(Int genus_, Int d1_, Int d2_, Int x1_, Int x2_)
    : genus(std::move(genus_)),
      d1(std::move(d1_)),
      d2(std::move(d2_)),
      x1(std::move(x1_)),
      x2(std::move(x2_)) {
  if (genus < 0) throw DomainError("family: genus must be >= 0");
  if (d1 < 1) throw DomainError("family: d1 must be >= 1 (the line bundles have negative degree)");
  if (d2 < 1) throw DomainError("family: d2 must be >= 1 (the line bundles have negative degree)");
  if (x1 < 1) throw DomainError("family: x1 must be >= 1 (positive twist)");
  if (x2 < 1) throw DomainError("family: x2 must be >= 1 (positive twist)");
}

ResolutionData make_resolution_data(const FamilyParams& p) {
  std::vector<CurveClass> curves;
  curves.push_back({"C", std::nullopt, {-p.d2, -p.d1}});
  curves.push_back({"F1", "S1", {-p.x1, Int(1)}});
  curves.push_back({"F2", "S2", {Int(1), -p.x2}});
  return ResolutionData({"S1", "S2"}, std::move(curves));
}

namespace {

// The three ampleness inequalities for -(a1 S1 + a2 S2) on S1 ∪ S2; they
// collapse to 1/x1 < a1/a2 < x2.
bool interval_holds(const FamilyParams& p, const Int& a1, const Int& a2) {
  return a1 * p.d2 + a2 * p.d1 > 0 && a1 * p.x1 - a2 > 0 && a2 * p.x2 - a1 > 0;
}

// Smallest-sum, then lexicographically smallest pair on the requested side.
// Must only be called when the side is feasible (x1 >= 2 resp. x2 >= 2);
// a witness of coefficient sum <= 5 then exists, so the scan terminates.
std::pair<Int, Int> side_witness(const FamilyParams& p, bool a1_lt_a2) {
  for (Int s = 2;; ++s) {
    for (Int a1 = 1; a1 < s; ++a1) {
      const Int a2 = s - a1;
      if (a1_lt_a2 ? a1 < a2 : a2 < a1) {
        if (interval_holds(p, a1, a2)) return {a1, a2};
      }
    }
  }
}

void require_agreement(bool closed_form, bool engine, const char* what) {
  if (closed_form != engine) {
    std::ostringstream os;
    os << "classification disagreement on " << what << ": closed form says "
       << (closed_form ? "yes" : "no") << ", certificate engine says "
       << (engine ? "yes" : "no");
    throw InternalError(os.str());
  }
}

}  // namespace

IntervalFeasibility interval_feasibility(const FamilyParams& p) {
  IntervalFeasibility out;
  const bool s1_side = p.x1 >= 2;  // a ratio below 1 fits iff 1/x1 < 1
  const bool s2_side = p.x2 >= 2;  // a ratio above 1 fits iff x2 > 1
  if (s1_side) out.witness_a1_lt_a2 = side_witness(p, true);
  if (s2_side) out.witness_a2_lt_a1 = side_witness(p, false);
  if (s1_side && s2_side)
    out.kind = IntervalKind::TwoSided;
  else if (s1_side || s2_side)
    out.kind = IntervalKind::OneSided;
  else
    out.kind = IntervalKind::None;  // x1 = x2 = 1: the interval (1, 1) is empty
  return out;
}

FamilyClassification classify(const FamilyParams& p) {
  FamilyClassification out{p};
  out.interval_lower = Rat(1, p.x1);
  out.interval_upper = p.x2;
  out.interval = interval_feasibility(p);

  const bool closed_contractible = p.x1 * p.x2 > 1;
  const bool closed_s1 = p.x1 >= 2;
  const bool closed_s2 = p.x2 >= 2;

  const ResolutionData data = make_resolution_data(p);
  out.grauert_certificate = find_grauert_certificate(data);
  out.nash = certify_nash_bijective(data);

  require_agreement(closed_contractible, out.grauert_certificate.has_value(),
                    "contractibility");
  require_agreement(closed_s1, out.nash.per_component[0].certified, "essentiality of S1");
  require_agreement(closed_s2, out.nash.per_component[1].certified, "essentiality of S2");
  require_agreement(closed_s1 && closed_s2, out.nash.certified, "Nash bijectivity");

  // The interval witnesses and the engine's canonical ordered certificates
  // solve the same integer system with the same tie-breaking, so they must
  // coincide exactly.
  const auto check_witness = [](const std::optional<std::pair<Int, Int>>& witness,
                                const ExceptionalDivisor& engine_cert, const char* side) {
    if (!witness) return;
    if (engine_cert[0] != witness->first || engine_cert[1] != witness->second) {
      std::ostringstream os;
      os << "classification disagreement on the " << side << " side: interval witness ("
         << witness->first << ", " << witness->second << ") differs from engine certificate "
         << engine_cert.str();
      throw InternalError(os.str());
    }
  };
  if (out.interval.witness_a1_lt_a2)
    check_witness(out.interval.witness_a1_lt_a2, out.nash.per_component[0].certificates.at(1),
                  "a1 < a2");
  if (out.interval.witness_a2_lt_a1)
    check_witness(out.interval.witness_a2_lt_a1, out.nash.per_component[1].certificates.at(0),
                  "a2 < a1");

  out.contractible = closed_contractible;
  return out;
}

}  // namespace nashcone
