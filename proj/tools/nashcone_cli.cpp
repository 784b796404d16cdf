// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors
//
// Command-line front end. Talks to the library exclusively through the
// extern-C interface in nashcone.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nashcone.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 1;

struct Range {
  long lo = 1, hi = 1;
};

// "--range lo:hi" applies to all four parameters; four comma-separated
// lo:hi fields set (d1, d2, x1, x2) individually.
std::optional<std::vector<Range>> parse_ranges(const std::string& text) {
  std::vector<std::string> fields;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (fields.size() != 1 && fields.size() != 4) return std::nullopt;

  std::vector<Range> ranges;
  for (const auto& f : fields) {
    const auto colon = f.find(':');
    if (colon == std::string::npos) return std::nullopt;
    try {
      Range r;
      r.lo = std::stol(f.substr(0, colon));
      r.hi = std::stol(f.substr(colon + 1));
      ranges.push_back(r);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (ranges.size() == 1) ranges.assign(4, ranges[0]);
  return ranges;
}

int map_error(nc_status status, const std::string& command) {
  std::cerr << "nashcone " << command << ": error: " << nc_last_error() << "\n";
  switch (status) {
    case NC_ERR_USAGE:
    case NC_ERR_PARSE:
    case NC_ERR_VALIDATION:
      return kExitUsage;
    case NC_ERR_DOMAIN:
      // Only toric-fan raises a domain error (x1*x2 <= 1): no model exists
      // because the germ is not contractible.
      return command == "toric-fan" ? 20 : kExitUsage;
    default:
      return kExitInternal;
  }
}

int emit_report(nc_report* report, nc_format format, const std::string& command) {
  char* text = nullptr;
  const nc_status status = nc_report_render(report, format, &text);
  if (status != NC_OK) {
    nc_report_free(report);
    return map_error(status, command);
  }
  std::cout << text;
  nc_string_free(text);
  const int code = nc_report_exit_code(report);
  nc_report_free(report);
  return code;
}

int run_self_test(nc_resolution* resolution, const std::string& command) {
  const nc_status status = nc_resolution_self_test(resolution, 0);
  if (status != NC_OK) {
    const int code = map_error(status, command);
    return status == NC_ERR_INTERNAL ? kExitInternal : code;
  }
  std::cerr << "self-test: feasibility answers confirmed by enumeration\n";
  return 0;
}

int cmd_classify(long genus, long d1, long d2, long x1, long x2, nc_format format,
                 bool self_test) {
  if (self_test) {
    nc_resolution* resolution = nullptr;
    nc_status status = nc_resolution_from_family(genus, d1, d2, x1, x2, &resolution);
    if (status != NC_OK) return map_error(status, "classify");
    const int code = run_self_test(resolution, "classify");
    nc_resolution_free(resolution);
    if (code != 0) return code;
  }
  nc_report* report = nullptr;
  const nc_status status = nc_classify_family(genus, d1, d2, x1, x2, &report);
  if (status != NC_OK) return map_error(status, "classify");
  return emit_report(report, format, "classify");
}

int cmd_toric_fan(long genus, long d1, long d2, long x1, long x2, nc_format format) {
  nc_report* report = nullptr;
  const nc_status status = nc_toric_fan(genus, d1, d2, x1, x2, &report);
  if (status != NC_OK) return map_error(status, "toric-fan");
  return emit_report(report, format, "toric-fan");
}

int cmd_check_resolution(const std::string& path, nc_format format, bool self_test) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      std::cerr << "nashcone check-resolution: error: cannot read " << path << "\n";
      return kExitUsage;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }

  nc_resolution* resolution = nullptr;
  nc_status status = nc_resolution_parse_json(text.c_str(), &resolution);
  if (status != NC_OK) return map_error(status, "check-resolution");
  if (self_test) {
    const int code = run_self_test(resolution, "check-resolution");
    if (code != 0) {
      nc_resolution_free(resolution);
      return code;
    }
  }
  nc_report* report = nullptr;
  status = nc_check_resolution(resolution, &report);
  nc_resolution_free(resolution);
  if (status != NC_OK) return map_error(status, "check-resolution");
  return emit_report(report, format, "check-resolution");
}

int cmd_scan(long genus, const std::vector<Range>& ranges, nc_format format) {
  for (const auto& r : ranges) {
    if (r.lo < 1) {
      std::cerr << "nashcone scan: error: range bounds must be >= 1\n";
      return kExitUsage;
    }
    if (r.hi < r.lo) {
      std::cerr << "nashcone scan: error: empty range " << r.lo << ":" << r.hi << "\n";
      return kExitUsage;
    }
  }

  long tuples = 0, bijective = 0, undetermined = 0, noncontractible = 0;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();

  for (long d1 = ranges[0].lo; d1 <= ranges[0].hi; ++d1)
    for (long d2 = ranges[1].lo; d2 <= ranges[1].hi; ++d2)
      for (long x1 = ranges[2].lo; x1 <= ranges[2].hi; ++x1)
        for (long x2 = ranges[3].lo; x2 <= ranges[3].hi; ++x2) {
          nc_report* report = nullptr;
          nc_status status = nc_classify_family(genus, d1, d2, x1, x2, &report);
          if (status != NC_OK) return map_error(status, "scan");
          ++tuples;
          const int code = nc_report_exit_code(report);
          if (code == 0)
            ++bijective;
          else if (code == 10)
            ++undetermined;
          else
            ++noncontractible;

          if (format == NC_FORMAT_HUMAN) {
            char* line = nullptr;
            status = nc_report_summary(report, &line);
            if (status != NC_OK) {
              nc_report_free(report);
              return map_error(status, "scan");
            }
            std::cout << line << "\n";
            nc_string_free(line);
          } else {
            char* verdicts = nullptr;
            status = nc_report_verdict_section(report, NC_FORMAT_JSON, &verdicts);
            if (status != NC_OK) {
              nc_report_free(report);
              return map_error(status, "scan");
            }
            nlohmann::ordered_json entry;
            entry["genus"] = genus;
            entry["d1"] = d1;
            entry["d2"] = d2;
            entry["x1"] = x1;
            entry["x2"] = x2;
            entry["verdicts"] = nlohmann::ordered_json::parse(verdicts);
            nc_string_free(verdicts);
            results.push_back(std::move(entry));
          }
          nc_report_free(report);
        }

  if (format == NC_FORMAT_HUMAN) {
    std::cout << "\n";
    std::cout << "tuples               " << tuples << "\n";
    std::cout << "certified-bijective  " << bijective << "\n";
    std::cout << "undetermined         " << undetermined << "\n";
    std::cout << "not-contractible     " << noncontractible << "\n";
  } else {
    nlohmann::ordered_json doc;
    doc["command"] = "scan";
    doc["genus"] = genus;
    doc["results"] = std::move(results);
    doc["counts"] = {{"tuples", tuples},
                     {"certified_bijective", bijective},
                     {"undetermined", undetermined},
                     {"not_contractible", noncontractible}};
    std::cout << doc.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certificates for contractibility and Nash-map bijectivity"};
  app.set_version_flag("--version", std::string(nc_version()));
  app.require_subcommand(1);

  struct {
    long genus = 0, d1 = 0, d2 = 0, x1 = 0, x2 = 0;
    std::string format = "human";
    std::string range;
    std::string input;
    bool self_test = false;
  } args;

  const auto add_family_flags = [&](CLI::App* cmd) {
    cmd->add_option("--genus", args.genus, "genus of the base curve")->capture_default_str();
    cmd->add_option("--d1", args.d1, "minus the degree of the first line bundle")->required();
    cmd->add_option("--d2", args.d2, "minus the degree of the second line bundle")->required();
    cmd->add_option("--x1", args.x1, "twist along the first curve at infinity")->required();
    cmd->add_option("--x2", args.x2, "twist along the second curve at infinity")->required();
  };
  const auto add_format_flag = [&](CLI::App* cmd) {
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();
  };

  CLI::App* classify = app.add_subcommand(
      "classify", "classify one family: contractibility, essentiality, Nash map");
  add_family_flags(classify);
  add_format_flag(classify);
  classify->add_flag("--self-test", args.self_test,
                     "cross-check feasibility against enumeration "
                     "(bound from NASHCONE_BRUTE_BOUND, default 50)");

  CLI::App* scan = app.add_subcommand("scan", "classify every tuple in a parameter box");
  scan->add_option("--genus", args.genus, "genus of the base curve")->capture_default_str();
  scan->add_option("--range", args.range,
                   "lo:hi for all of d1,d2,x1,x2, or four comma-separated lo:hi")
      ->required();
  add_format_flag(scan);

  CLI::App* check = app.add_subcommand(
      "check-resolution", "verdicts for user-supplied resolution data (JSON)");
  check->add_option("--input", args.input, "path to the resolution file, - for stdin")
      ->required();
  add_format_flag(check);
  check->add_flag("--self-test", args.self_test,
                  "cross-check feasibility against enumeration "
                  "(bound from NASHCONE_BRUTE_BOUND, default 50)");

  CLI::App* toric = app.add_subcommand(
      "toric-fan", "emit the toric model: rays, cones, intersection table, convexity");
  add_family_flags(toric);
  add_format_flag(toric);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const nc_format format = args.format == "json" ? NC_FORMAT_JSON : NC_FORMAT_HUMAN;
  if (classify->parsed())
    return cmd_classify(args.genus, args.d1, args.d2, args.x1, args.x2, format,
                        args.self_test);
  if (scan->parsed()) {
    const auto ranges = parse_ranges(args.range);
    if (!ranges) {
      std::cerr << "nashcone scan: error: cannot parse --range \"" << args.range
                << "\" (expected lo:hi or four comma-separated lo:hi)\n";
      return kExitUsage;
    }
    return cmd_scan(args.genus, *ranges, format);
  }
  if (check->parsed()) return cmd_check_resolution(args.input, format, args.self_test);
  if (toric->parsed())
    return cmd_toric_fan(args.genus, args.d1, args.d2, args.x1, args.x2, format);
  return kExitUsage;
}
