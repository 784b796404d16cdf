// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors

#include "nashcone/report.hpp"

#include <limits>
#include <sstream>

#include <json.hpp>

namespace nashcone {

namespace {

using json = nlohmann::ordered_json;

json json_int(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();  // decimal string once past 64 bits
}

json json_divisor(const ExceptionalDivisor& d) {
  json out = json::array();
  for (const Int& a : d.coeffs()) out.push_back(json_int(a));
  return out;
}

json json_vector(const LatticeVector& v) {
  json out = json::array();
  for (const Int& c : v.coords()) out.push_back(json_int(c));
  return out;
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

std::string pad(const std::string& s, std::size_t width) {
  std::string out = s;
  while (out.size() < width) out.push_back(' ');
  return out;
}

std::string section_title(const std::string& title, char rule) {
  return title + "\n" + std::string(title.size(), rule) + "\n";
}

std::string pair_str(const Int& a, const Int& b) {
  std::ostringstream os;
  os << '(' << a << ", " << b << ')';
  return os.str();
}

std::string certificate_label(const std::string& from, const std::string& to) {
  return "F[" + from + "<" + to + "]";
}

// Emission-time re-verification: a printed certificate must still pass the
// checks it claims.
void verify_before_print(const Report& report) {
  if (!report.has_verdicts) return;
  if (report.grauert && !kleiman_check(report.data, *report.grauert))
    throw InternalError("report: the printed contractibility certificate fails "
                        "re-verification");
  for (const auto& comp : report.components) {
    const std::size_t i = report.data.component_index(comp.name);
    for (const auto& [other, cert] : comp.certificates) {
      const std::size_t j = report.data.component_index(other);
      if (!kleiman_check(report.data, cert) || !(cert[i] < cert[j]))
        throw InternalError("report: certificate " + certificate_label(comp.name, other) +
                            " fails re-verification");
    }
  }
}

std::string human_input_section(const FamilyParams& p) {
  std::ostringstream os;
  os << section_title("input", '-');
  os << "genus  " << p.genus << "\n";
  os << "d1     " << p.d1 << "\n";
  os << "d2     " << p.d2 << "\n";
  os << "x1     " << p.x1 << "\n";
  os << "x2     " << p.x2 << "\n";
  return os.str();
}

std::string human_data_section(const ResolutionData& data) {
  std::ostringstream os;
  os << section_title("resolution data", '-');
  std::size_t width = std::string("components").size();
  for (const auto& z : data.curves()) width = std::max(width, z.name.size() + 6);
  os << pad("components", width + 2);
  for (std::size_t k = 0; k < data.components().size(); ++k)
    os << (k ? ", " : "") << data.components()[k];
  os << "\n";
  for (const auto& z : data.curves()) {
    std::ostringstream row;
    row << '(';
    for (std::size_t k = 0; k < z.intersections.size(); ++k)
      row << (k ? ", " : "") << z.intersections[k];
    row << ')';
    os << pad("curve " + z.name, width + 2) << row.str();
    if (z.component) os << "   [" << *z.component << "]";
    os << "\n";
  }
  return os.str();
}

std::string human_family_section(const FamilyClassification& fc) {
  std::ostringstream os;
  os << section_title("family analysis", '-');
  os << "ample interval     (" << rat_str(fc.interval_lower) << ", " << fc.interval_upper
     << ")\n";
  const char* kind = fc.interval.kind == IntervalKind::TwoSided   ? "two-sided"
                     : fc.interval.kind == IntervalKind::OneSided ? "one-sided"
                                                                  : "none";
  os << "integer solutions  " << kind << "\n";
  os << "witness a1 < a2    "
     << (fc.interval.witness_a1_lt_a2
             ? pair_str(fc.interval.witness_a1_lt_a2->first, fc.interval.witness_a1_lt_a2->second)
             : "none")
     << "\n";
  os << "witness a2 < a1    "
     << (fc.interval.witness_a2_lt_a1
             ? pair_str(fc.interval.witness_a2_lt_a1->first, fc.interval.witness_a2_lt_a1->second)
             : "none")
     << "\n";
  return os.str();
}

std::string human_verdict_section(const Report& report) {
  std::size_t width = std::string("grauert certificate").size();
  for (const auto& comp : report.components) width = std::max(width, comp.name.size());
  std::ostringstream os;
  os << section_title("verdicts", '-');
  os << pad("contractible", width + 2) << (report.contractible ? "yes" : "no") << "\n";
  os << pad("grauert certificate", width + 2)
     << (report.grauert ? report.grauert->str() : "none") << "\n";
  for (const auto& comp : report.components) {
    os << pad(comp.name, width + 2)
       << pad(comp.certified ? "certified" : "undetermined", 14);
    bool first = true;
    for (const auto& [other, cert] : comp.certificates) {
      os << (first ? "" : "  ") << certificate_label(comp.name, other) << " = "
         << cert.str();
      first = false;
    }
    for (const auto& other : comp.missing) {
      os << (first ? "" : "  ") << "missing " << certificate_label(comp.name, other);
      first = false;
    }
    os << "\n";
  }
  os << pad("nash map", width + 2)
     << (report.nash_certified ? "certified-bijective" : "undetermined") << "\n";
  return os.str();
}

json json_verdict_section(const Report& report) {
  json verdicts;
  verdicts["contractible"] = report.contractible;
  verdicts["grauert_certificate"] =
      report.grauert ? json_divisor(*report.grauert) : json(nullptr);
  verdicts["components"] = json::array();
  for (const auto& comp : report.components) {
    json entry;
    entry["name"] = comp.name;
    entry["verdict"] = comp.certified ? "certified" : "undetermined";
    json certs = json::object();
    for (const auto& [other, cert] : comp.certificates) certs[other] = json_divisor(cert);
    entry["certificates"] = std::move(certs);
    if (!comp.missing.empty()) entry["missing"] = comp.missing;
    verdicts["components"].push_back(std::move(entry));
  }
  verdicts["nash_bijective"] = report.nash_certified ? "certified" : "undetermined";
  return verdicts;
}

std::string human_toric_section(const ToricSection& toric, const Int& genus) {
  std::ostringstream os;
  if (toric.full_detail && toric.model) {
    const ToricModel& model = *toric.model;
    os << section_title("fan", '-');
    for (std::size_t k = 0; k < model.fan.rays().size(); ++k)
      os << pad("ray " + model.fan.ray_names()[k], 18) << model.fan.rays()[k].str() << "\n";
    os << pad("maximal cones", 18);
    for (std::size_t c = 0; c < model.fan.max_cones().size(); ++c) {
      const auto& tri = model.fan.max_cones()[c];
      os << (c ? " " : "") << '<' << model.fan.ray_names()[tri[0]] << ','
         << model.fan.ray_names()[tri[1]] << ',' << model.fan.ray_names()[tri[2]] << '>';
    }
    os << "\n";
    os << pad("gamma edges", 18);
    for (std::size_t k = 0; k < model.gamma.edges().size(); ++k)
      os << (k ? "  " : "") << model.gamma.edges()[k].str();
    os << "\n";
    os << pad("regular", 18) << "yes\n";
    os << pad("subdivides gamma", 18) << "yes\n";
    os << "\n" << section_title("intersection table", '-');
    for (const auto& row : toric.table->rows) {
      std::ostringstream lhs;
      lhs << 'V' << row.wall << " . V_" << row.ray;
      os << pad(lhs.str(), 14) << pad(row.computed.str(), 6) << "expected "
         << pad(row.expected.str(), 6) << (row.computed == row.expected ? "ok" : "MISMATCH")
         << "\n";
    }
    os << "\n" << section_title("convexity certificate", '-');
    os << pad("form", 19) << model.convexity_form.str() << "\n";
    os << pad("pairing with a", 19) << toric.convexity->first << "\n";
    os << pad("pairing with f", 19) << toric.convexity->second << "\n";
    os << pad("pairing with d, e", 19) << "0\n";
    os << "\n";
  }
  os << section_title("toric model", '-');
  os << pad("toric", 24) << (toric.is_toric ? "yes" : "no") << " (genus " << genus << ")\n";
  os << pad("smooth representatives", 24) << '{' << toric.smooth_representatives[0] << ", "
     << toric.smooth_representatives[1] << "}\n";
  if (toric.gamma) {
    os << pad("gamma edges", 24);
    for (std::size_t k = 0; k < toric.gamma->edges().size(); ++k)
      os << (k ? "  " : "") << toric.gamma->edges()[k].str();
    os << "\n";
  }
  os << pad("note", 24) << toric.note << "\n";
  return os.str();
}

json json_toric_section(const ToricSection& toric) {
  json out;
  out["is_toric"] = toric.is_toric;
  out["smooth_representatives"] = {json_int(toric.smooth_representatives[0]),
                                   json_int(toric.smooth_representatives[1])};
  out["note"] = toric.note;
  if (toric.gamma) {
    json edges = json::array();
    for (const auto& e : toric.gamma->edges()) edges.push_back(json_vector(e));
    out["gamma_edges"] = std::move(edges);
  }
  if (toric.full_detail && toric.model) {
    const ToricModel& model = *toric.model;
    json rays;
    for (std::size_t k = 0; k < model.fan.rays().size(); ++k)
      rays[model.fan.ray_names()[k]] = json_vector(model.fan.rays()[k]);
    out["rays"] = std::move(rays);
    json cones = json::array();
    for (const auto& tri : model.fan.max_cones())
      cones.push_back({model.fan.ray_names()[tri[0]], model.fan.ray_names()[tri[1]],
                       model.fan.ray_names()[tri[2]]});
    out["max_cones"] = std::move(cones);
    json gamma_edges = json::array();
    for (const auto& e : model.gamma.edges()) gamma_edges.push_back(json_vector(e));
    out["gamma_edges"] = std::move(gamma_edges);
    out["regular"] = true;
    out["subdivides_gamma"] = true;
    json table = json::array();
    for (const auto& row : toric.table->rows) {
      json r;
      r["wall"] = row.wall;
      r["ray"] = row.ray;
      r["computed"] = json_int(row.computed);
      r["expected"] = json_int(row.expected);
      r["ok"] = row.computed == row.expected;
      table.push_back(std::move(r));
    }
    out["intersection_table"] = std::move(table);
    json convexity;
    json form = json::array();
    for (const Int& c : model.convexity_form.coeffs()) form.push_back(json_int(c));
    convexity["form"] = std::move(form);
    convexity["on_a"] = json_int(toric.convexity->first);
    convexity["on_f"] = json_int(toric.convexity->second);
    out["convexity_certificate"] = std::move(convexity);
  }
  return out;
}

json json_input_section(const Report& report) {
  json input;
  if (report.params) {
    input["genus"] = json_int(report.params->genus);
    input["d1"] = json_int(report.params->d1);
    input["d2"] = json_int(report.params->d2);
    input["x1"] = json_int(report.params->x1);
    input["x2"] = json_int(report.params->x2);
  }
  json resolution;
  resolution["components"] = report.data.components();
  resolution["curves"] = json::array();
  for (const auto& z : report.data.curves()) {
    json curve;
    curve["name"] = z.name;
    if (z.component) curve["component"] = *z.component;
    json numbers = json::array();
    for (const Int& v : z.intersections) numbers.push_back(json_int(v));
    curve["intersections"] = std::move(numbers);
    resolution["curves"].push_back(std::move(curve));
  }
  input["resolution"] = std::move(resolution);
  return input;
}

json json_family_section(const FamilyClassification& fc) {
  json out;
  out["ample_interval"] = {{"lower", rat_str(fc.interval_lower)},
                           {"upper", json_int(fc.interval_upper)}};
  out["integer_solutions"] = fc.interval.kind == IntervalKind::TwoSided   ? "two-sided"
                             : fc.interval.kind == IntervalKind::OneSided ? "one-sided"
                                                                          : "none";
  out["witness_a1_lt_a2"] =
      fc.interval.witness_a1_lt_a2
          ? json::array({json_int(fc.interval.witness_a1_lt_a2->first),
                         json_int(fc.interval.witness_a1_lt_a2->second)})
          : json(nullptr);
  out["witness_a2_lt_a1"] =
      fc.interval.witness_a2_lt_a1
          ? json::array({json_int(fc.interval.witness_a2_lt_a1->first),
                         json_int(fc.interval.witness_a2_lt_a1->second)})
          : json(nullptr);
  return out;
}

}  // namespace

int Report::exit_code() const {
  if (!has_verdicts) return 0;  // informational report (toric-fan)
  if (!contractible) return 20;
  return nash_certified ? 0 : 10;
}

std::string Report::verdict_section(ReportFormat format) const {
  verify_before_print(*this);
  if (format == ReportFormat::Human) return human_verdict_section(*this);
  return json_verdict_section(*this).dump(2) + "\n";
}

std::string Report::render(ReportFormat format) const {
  verify_before_print(*this);
  if (format == ReportFormat::Json) {
    json doc;
    doc["command"] = command;
    doc["input"] = json_input_section(*this);
    if (family) doc["family"] = json_family_section(*family);
    if (has_verdicts) doc["verdicts"] = json_verdict_section(*this);
    if (toric) doc["toric"] = json_toric_section(*toric);
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  os << section_title("nashcone " + command, '=') << "\n";
  if (params) os << human_input_section(*params) << "\n";
  if (command != "toric-fan") os << human_data_section(data) << "\n";
  if (family) os << human_family_section(*family) << "\n";
  if (has_verdicts) os << human_verdict_section(*this) << "\n";
  if (toric) os << human_toric_section(*toric, params ? params->genus : Int(0));
  std::string out = os.str();
  while (out.size() >= 2 && out[out.size() - 1] == '\n' && out[out.size() - 2] == '\n')
    out.pop_back();
  return out;
}

namespace {

std::vector<ComponentReport> build_component_reports(const ResolutionData& data,
                                                     const NashVerdict& nash) {
  std::vector<ComponentReport> out;
  for (std::size_t i = 0; i < data.component_count(); ++i) {
    ComponentReport comp;
    comp.name = data.components()[i];
    comp.certified = nash.per_component[i].certified;
    for (const auto& [j, cert] : nash.per_component[i].certificates)
      comp.certificates.emplace_back(data.components()[j], cert);
    for (std::size_t j = 0; j < data.component_count(); ++j)
      if (j != i && !nash.per_component[i].certificates.count(j))
        comp.missing.push_back(data.components()[j]);
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

Report run_classify(const FamilyParams& params) {
  FamilyClassification fc = classify(params);
  Report report("classify", make_resolution_data(params));
  report.params = params;
  report.has_verdicts = true;
  report.contractible = fc.contractible;
  report.grauert = fc.grauert_certificate;
  report.components = build_component_reports(report.data, fc.nash);
  report.nash_certified = fc.nash.certified;

  if (fc.contractible) {
    // The fan exists for every contractible tuple; building it here keeps
    // classify honest about the toric bookkeeping even when it only prints
    // the short section.
    const ToricModel model = build_fan(params);
    const IntersectionCheck table = verify_intersection_table(model, params);
    if (!table.ok)
      throw InternalError("classify: toric intersection numbers disagree with the "
                          "family rows");
    convexity_certificate(model, params);

    ToricSection toric;
    const ToricityReport toricity = toricity_report(params);
    toric.is_toric = toricity.is_toric;
    toric.smooth_representatives = toricity.smooth_representatives;
    toric.note = toricity.distinguishing_note;
    toric.gamma = toricity.gamma;
    report.toric = std::move(toric);
  }
  report.family = std::move(fc);
  return report;
}

Report run_check_resolution(const ResolutionData& data) {
  Report report("check-resolution", data);
  report.has_verdicts = true;
  report.grauert = find_grauert_certificate(data);
  report.contractible = report.grauert.has_value();
  const NashVerdict nash = certify_nash_bijective(data);
  report.components = build_component_reports(data, nash);
  report.nash_certified = nash.certified;
  return report;
}

Report run_toric_fan(const FamilyParams& params) {
  ToricModel model = build_fan(params);
  Report report("toric-fan", make_resolution_data(params));
  report.params = params;

  ToricSection toric;
  toric.full_detail = true;
  const ToricityReport toricity = toricity_report(params);
  toric.is_toric = toricity.is_toric;
  toric.smooth_representatives = toricity.smooth_representatives;
  toric.note = toricity.distinguishing_note;
  toric.gamma = toricity.gamma;
  toric.table = verify_intersection_table(model, params);
  if (!toric.table->ok)
    throw InternalError("toric-fan: intersection numbers disagree with the family rows");
  toric.convexity = convexity_certificate(model, params);
  toric.model = std::move(model);
  report.toric = std::move(toric);
  return report;
}

}  // namespace nashcone
