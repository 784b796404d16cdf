// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors
//
// Report assembly and deterministic rendering for the command layer. The
// verdict section is rendered from the verdict data alone, so classify and
// check-resolution produce byte-identical verdict sections on equivalent
// inputs. Every certificate is re-verified at emission time.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nashcone/criterion.hpp"
#include "nashcone/family.hpp"
#include "nashcone/toric.hpp"

namespace nashcone {

enum class ReportFormat { Human, Json };

struct ComponentReport {
  std::string name;
  bool certified = false;
  /// other-component name -> ordered certificate F[this < other]
  std::vector<std::pair<std::string, ExceptionalDivisor>> certificates;
  std::vector<std::string> missing;  // pairs with no certificate
};

struct ToricSection {
  bool is_toric = false;
  std::array<Int, 2> smooth_representatives{};
  std::string note;
  std::optional<Cone> gamma;  // attached when toric
  // Filled only by the toric-fan command:
  bool full_detail = false;
  std::optional<ToricModel> model;
  std::optional<IntersectionCheck> table;
  std::optional<std::pair<Int, Int>> convexity;
};

struct Report {
  Report(std::string command, ResolutionData data)
      : command(std::move(command)), data(std::move(data)) {}

  std::string command;  // "classify" | "check-resolution" | "toric-fan"
  std::optional<FamilyParams> params;
  ResolutionData data;

  bool has_verdicts = false;
  bool contractible = false;
  std::optional<ExceptionalDivisor> grauert;
  std::vector<ComponentReport> components;
  bool nash_certified = false;

  std::optional<FamilyClassification> family;  // classify only
  std::optional<ToricSection> toric;

  /// 0 certified-bijective, 10 contractible but undetermined, 20 not
  /// contractible; toric-fan reports exit 0 (they exist only on success).
  int exit_code() const;

  /// Full report. Re-runs kleiman_check and the ordering constraints on
  /// every printed certificate; a failure is an InternalError.
  std::string render(ReportFormat format) const;

  /// Only the verdict block, same bytes as inside render().
  std::string verdict_section(ReportFormat format) const;
};

Report run_classify(const FamilyParams& params);
Report run_check_resolution(const ResolutionData& data);
Report run_toric_fan(const FamilyParams& params);

}  // namespace nashcone
