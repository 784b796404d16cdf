// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The nashcone authors

#include "nashcone.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "nashcone/report.hpp"
#include "nashcone/resolution_io.hpp"

struct nc_resolution {
  nashcone::ResolutionData data;
};

struct nc_report {
  nashcone::Report report;
};

namespace {

thread_local std::string g_last_error;

nc_status fail(nc_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Maps the C++ error taxonomy onto status codes; anything unexpected is an
// internal error.
template <typename Fn>
nc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return NC_OK;
  } catch (const nashcone::ParseError& e) {
    return fail(NC_ERR_PARSE, e.what());
  } catch (const nashcone::ValidationError& e) {
    return fail(NC_ERR_VALIDATION, e.what());
  } catch (const nashcone::DomainError& e) {
    return fail(NC_ERR_DOMAIN, e.what());
  } catch (const nashcone::StructuralError& e) {
    return fail(NC_ERR_USAGE, e.what());
  } catch (const nashcone::InternalError& e) {
    return fail(NC_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(NC_ERR_INTERNAL, e.what());
  }
}

// Parameter invariants are usage errors at this boundary, not domain
// errors: the caller passed flags that no family admits.
nc_status check_family_args(long genus, long d1, long d2, long x1, long x2) {
  const auto reject = [](const char* msg) { return fail(NC_ERR_USAGE, msg); };
  if (genus < 0) return reject("genus must be >= 0");
  if (d1 < 1) return reject("d1 must be >= 1 (the line bundles have negative degree)");
  if (d2 < 1) return reject("d2 must be >= 1 (the line bundles have negative degree)");
  if (x1 < 1) return reject("x1 must be >= 1 (positive twist)");
  if (x2 < 1) return reject("x2 must be >= 1 (positive twist)");
  return NC_OK;
}

nashcone::FamilyParams to_params(long genus, long d1, long d2, long x1, long x2) {
  using nashcone::Int;
  return nashcone::FamilyParams(Int(genus), Int(d1), Int(d2), Int(x1), Int(x2));
}

}  // namespace

extern "C" {

const char* nc_version(void) { return "0.1.0"; }

const char* nc_last_error(void) { return g_last_error.c_str(); }

nc_status nc_resolution_parse_json(const char* text, nc_resolution** out) {
  if (!text || !out) return fail(NC_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new nc_resolution{nashcone::parse_resolution_json(text)};
  });
}

nc_status nc_resolution_from_family(long genus, long d1, long d2, long x1, long x2,
                                    nc_resolution** out) {
  if (!out) return fail(NC_ERR_USAGE, "null argument");
  *out = nullptr;
  if (nc_status st = check_family_args(genus, d1, d2, x1, x2); st != NC_OK) return st;
  return guarded([&] {
    *out = new nc_resolution{
        nashcone::make_resolution_data(to_params(genus, d1, d2, x1, x2))};
  });
}

nc_status nc_resolution_to_json(const nc_resolution* res, char** out) {
  if (!res || !out) return fail(NC_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] { *out = copy_string(nashcone::resolution_to_json(res->data)); });
}

void nc_resolution_free(nc_resolution* res) { delete res; }

nc_status nc_classify_family(long genus, long d1, long d2, long x1, long x2,
                             nc_report** out) {
  if (!out) return fail(NC_ERR_USAGE, "null argument");
  *out = nullptr;
  if (nc_status st = check_family_args(genus, d1, d2, x1, x2); st != NC_OK) return st;
  return guarded([&] {
    *out = new nc_report{nashcone::run_classify(to_params(genus, d1, d2, x1, x2))};
  });
}

nc_status nc_check_resolution(const nc_resolution* res, nc_report** out) {
  if (!res || !out) return fail(NC_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new nc_report{nashcone::run_check_resolution(res->data)};
  });
}

nc_status nc_toric_fan(long genus, long d1, long d2, long x1, long x2, nc_report** out) {
  if (!out) return fail(NC_ERR_USAGE, "null argument");
  *out = nullptr;
  if (nc_status st = check_family_args(genus, d1, d2, x1, x2); st != NC_OK) return st;
  return guarded([&] {
    *out = new nc_report{nashcone::run_toric_fan(to_params(genus, d1, d2, x1, x2))};
  });
}

int nc_report_exit_code(const nc_report* rep) {
  if (!rep) return -1;
  return rep->report.exit_code();
}

nc_status nc_report_render(const nc_report* rep, nc_format format, char** out) {
  if (!rep || !out) return fail(NC_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(rep->report.render(format == NC_FORMAT_JSON
                                              ? nashcone::ReportFormat::Json
                                              : nashcone::ReportFormat::Human));
  });
}

nc_status nc_report_verdict_section(const nc_report* rep, nc_format format, char** out) {
  if (!rep || !out) return fail(NC_ERR_USAGE, "null argument");
  *out = nullptr;
  if (!rep->report.has_verdicts)
    return fail(NC_ERR_DOMAIN, "this report carries no verdict section");
  return guarded([&] {
    *out = copy_string(rep->report.verdict_section(format == NC_FORMAT_JSON
                                                       ? nashcone::ReportFormat::Json
                                                       : nashcone::ReportFormat::Human));
  });
}

nc_status nc_report_summary(const nc_report* rep, char** out) {
  if (!rep || !out) return fail(NC_ERR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    const nashcone::Report& r = rep->report;
    std::ostringstream os;
    if (r.params) {
      os << "genus=" << r.params->genus << " d1=" << r.params->d1
         << " d2=" << r.params->d2 << " x1=" << r.params->x1 << " x2=" << r.params->x2
         << "  ";
    }
    if (r.has_verdicts) {
      const std::string verdict = !r.contractible      ? "not-contractible"
                                  : r.nash_certified   ? "certified-bijective"
                                                       : "undetermined";
      os << verdict;
      for (std::size_t i = verdict.size(); i < 19; ++i) os << ' ';
      os << "  grauert=" << (r.grauert ? r.grauert->str() : "none");
    } else {
      os << "toric model emitted";
    }
    *out = copy_string(os.str());
  });
}

void nc_report_free(nc_report* rep) { delete rep; }

nc_status nc_resolution_self_test(const nc_resolution* res, long bound) {
  if (!res) return fail(NC_ERR_USAGE, "null argument");
  long effective = bound;
  if (effective <= 0) {
    effective = 50;
    if (const char* env = std::getenv("NASHCONE_BRUTE_BOUND")) {
      char* end = nullptr;
      const long parsed = std::strtol(env, &end, 10);
      if (end && *end == '\0' && parsed >= 1) effective = parsed;
    }
  }
  std::string detail;
  return guarded([&] {
    if (!nashcone::brute_force_cross_check(res->data, effective, &detail))
      throw nashcone::InternalError("self-test failed: " + detail);
  });
}

void nc_string_free(char* s) { std::free(s); }

}  // extern "C"
