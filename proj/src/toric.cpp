// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors

#include "nashcone/toric.hpp"

#include <sstream>

namespace nashcone {

namespace {

constexpr std::size_t kRayA = 0, kRayB = 1, kRayC = 2, kRayD = 3, kRayE = 4, kRayF = 5;

}  // namespace

ToricModel build_fan(const FamilyParams& p) {
  if (p.x1 * p.x2 <= 1)
    throw DomainError("toric model: requires x1*x2 > 1; for x1 = x2 = 1 the target "
                      "cone degenerates (it contains a line)");

  const LatticeVector va{1, 0, 0};
  const LatticeVector vb{0, 1, 0};
  const LatticeVector ve{0, 0, 1};
  const LatticeVector vc(std::vector<Int>{Int(-1), p.x1, Int(0)});
  const LatticeVector vd(std::vector<Int>{-p.x2, p.x1 * p.x2 - 1, Int(0)});
  const LatticeVector vf(std::vector<Int>{-p.d1, p.d2 + p.d1 * p.x1, Int(-1)});

  Fan fan({"a", "b", "c", "d", "e", "f"}, {va, vb, vc, vd, ve, vf},
          {{kRayA, kRayB, kRayE},
           {kRayB, kRayC, kRayE},
           {kRayC, kRayD, kRayE},
           {kRayA, kRayB, kRayF},
           {kRayB, kRayC, kRayF},
           {kRayC, kRayD, kRayF}});
  Cone gamma({va, ve, vd, vf}, 3);
  LinearForm m(std::vector<Int>{p.x1 * p.x2 - 1, p.x2, Int(0)});

  for (const auto& tri : fan.max_cones()) {
    const Cone cone({fan.rays()[tri[0]], fan.rays()[tri[1]], fan.rays()[tri[2]]}, 3);
    if (!is_regular(cone))
      throw InternalError("toric model: maximal cone <" + fan.ray_names()[tri[0]] + "," +
                          fan.ray_names()[tri[1]] + "," + fan.ray_names()[tri[2]] +
                          "> is not regular");
  }
  if (!is_strictly_convex(gamma))
    throw InternalError("toric model: gamma is not strictly convex");
  if (!fan_is_subdivision_of(fan, gamma))
    throw InternalError("toric model: the fan does not subdivide gamma");

  return ToricModel{std::move(fan), std::move(gamma), std::move(m)};
}

std::map<std::string, Int> character_divisor(const ToricModel& model, const LinearForm& m) {
  std::map<std::string, Int> out;
  for (std::size_t k = 0; k < model.fan.rays().size(); ++k)
    out[model.fan.ray_names()[k]] = pairing(m, model.fan.rays()[k]);
  return out;
}

IntersectionCheck verify_intersection_table(const ToricModel& model,
                                            const FamilyParams& p) {
  const WallRelation bc = wall_relation(model.fan, model.fan.wall("b", "c"));
  const WallRelation be = wall_relation(model.fan, model.fan.wall("b", "e"));
  const WallRelation ce = wall_relation(model.fan, model.fan.wall("c", "e"));

  IntersectionCheck check;
  check.rows = {
      {"<b,c>", "b", bc.intersection_numbers.at("b"), -p.d2},
      {"<b,c>", "c", bc.intersection_numbers.at("c"), -p.d1},
      {"<b,e>", "b", be.intersection_numbers.at("b"), -p.x1},
      {"<c,e>", "c", ce.intersection_numbers.at("c"), -p.x2},
      // Forced by smoothness: a curve meets a surface through its wall
      // transversely in one orbit.
      {"<b,e>", "c", be.intersection_numbers.at("c"), Int(1)},
      {"<c,e>", "b", ce.intersection_numbers.at("b"), Int(1)},
  };
  check.ok = true;
  for (const auto& row : check.rows) check.ok = check.ok && row.computed == row.expected;
  return check;
}

std::pair<Int, Int> convexity_certificate(const ToricModel& model, const FamilyParams& p) {
  const LinearForm& m = model.convexity_form;
  const Int on_a = pairing(m, model.fan.ray("a"));
  const Int on_d = pairing(m, model.fan.ray("d"));
  const Int on_e = pairing(m, model.fan.ray("e"));
  const Int on_f = pairing(m, model.fan.ray("f"));
  if (on_d != 0 || on_e != 0)
    throw InternalError("convexity certificate: the form does not vanish on d and e");
  if (on_a != p.x1 * p.x2 - 1 || on_f != p.d1 + p.x2 * p.d2) {
    std::ostringstream os;
    os << "convexity certificate: expected (" << p.x1 * p.x2 - 1 << ", "
       << p.d1 + p.x2 * p.d2 << "), computed (" << on_a << ", " << on_f << ")";
    throw InternalError(os.str());
  }
  if (on_a < 1 || on_f < 1)
    throw InternalError("convexity certificate: pairings must be positive");
  return {on_a, on_f};
}

ToricityReport toricity_report(const FamilyParams& p) {
  if (p.x1 * p.x2 <= 1)
    throw DomainError("toricity report: requires x1*x2 > 1 (no germ is produced "
                      "otherwise)");
  ToricityReport report;
  report.is_toric = p.genus == 0;
  report.smooth_representatives = {p.genus, p.genus};
  if (report.is_toric) {
    report.gamma = build_fan(p).gamma;
    report.distinguishing_note =
        "genus 0: the germ is analytically isomorphic to the affine normal toric "
        "variety of the attached cone at its fixed point";
  } else {
    std::ostringstream os;
    os << "genus " << p.genus
       << ": both smooth representatives are the base curve, so the germ is not "
          "analytically isomorphic to any toric germ, nor to a germ of this kind "
          "over a base curve of different genus";
    report.distinguishing_note = os.str();
  }
  return report;
}

}  // namespace nashcone
