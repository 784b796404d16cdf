/* SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 The nashcone authors
 *
 * C interface to the nashcone library. All objects are opaque handles
 * created and destroyed here; every function returns a status code and
 * reports results through out-parameters. Strings returned through char**
 * are owned by the caller and must be released with nc_string_free().
 *
 * The library certifies contractibility of an exceptional divisor and
 * bijectivity of the Nash map from exact intersection data, classifies the
 * built-in two-surface 3-fold families, and emits their toric models.
 * Everything is exact integer/rational arithmetic; results are
 * deterministic and byte-stable across runs.
 */

#ifndef NASHCONE_H
#define NASHCONE_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define NASHCONE_API __declspec(dllexport)
#else
#define NASHCONE_API __attribute__((visibility("default")))
#endif

typedef enum nc_status {
  NC_OK = 0,
  NC_ERR_USAGE = 1,      /* null handle or parameter outside its invariant */
  NC_ERR_PARSE = 2,      /* unparseable input text */
  NC_ERR_VALIDATION = 3, /* parseable input violating the schema */
  NC_ERR_DOMAIN = 4,     /* valid input outside an operation's domain */
  NC_ERR_INTERNAL = 5    /* broken internal consistency; always a bug */
} nc_status;

typedef enum nc_format { NC_FORMAT_HUMAN = 0, NC_FORMAT_JSON = 1 } nc_format;

/* Exceptional-divisor intersection data of a divisorial resolution. */
typedef struct nc_resolution nc_resolution;

/* A finished verdict report. */
typedef struct nc_report nc_report;

NASHCONE_API const char* nc_version(void);

/* Message for the most recent failing call on this thread ("" if none). */
NASHCONE_API const char* nc_last_error(void);

/* ---- resolution data ---------------------------------------------- */

NASHCONE_API nc_status nc_resolution_parse_json(const char* text, nc_resolution** out);

/* Intersection rows of the family (genus, d1, d2, x1, x2):
 * components S1, S2 and curves C=(-d2,-d1), F1=(-x1,1), F2=(1,-x2). */
NASHCONE_API nc_status nc_resolution_from_family(long genus, long d1, long d2, long x1,
                                                 long x2, nc_resolution** out);

NASHCONE_API nc_status nc_resolution_to_json(const nc_resolution* res, char** out);

NASHCONE_API void nc_resolution_free(nc_resolution* res);

/* ---- verdicts ------------------------------------------------------ */

/* Full classification of a family: contractibility, per-component
 * essentiality certificates, Nash bijectivity, toric section. */
NASHCONE_API nc_status nc_classify_family(long genus, long d1, long d2, long x1, long x2,
                                          nc_report** out);

/* Certificates and verdicts for arbitrary resolution data. */
NASHCONE_API nc_status nc_check_resolution(const nc_resolution* res, nc_report** out);

/* Fan, intersection table and convexity certificate of the toric model.
 * Fails with NC_ERR_DOMAIN when x1*x2 <= 1 (no model exists). */
NASHCONE_API nc_status nc_toric_fan(long genus, long d1, long d2, long x1, long x2,
                                    nc_report** out);

/* 0 certified-bijective, 10 contractible but undetermined, 20 not
 * contractible; informational reports return 0. -1 on a null handle. */
NASHCONE_API int nc_report_exit_code(const nc_report* rep);

NASHCONE_API nc_status nc_report_render(const nc_report* rep, nc_format format,
                                        char** out);

/* Only the verdict block; byte-identical between nc_classify_family and
 * nc_check_resolution on equivalent inputs. */
NASHCONE_API nc_status nc_report_verdict_section(const nc_report* rep, nc_format format,
                                                 char** out);

/* One summary line, e.g. for parameter scans. */
NASHCONE_API nc_status nc_report_summary(const nc_report* rep, char** out);

NASHCONE_API void nc_report_free(nc_report* rep);

/* ---- self test ------------------------------------------------------ */

/* Cross-checks the elimination-based feasibility answers against direct
 * enumeration over [1..bound]^n (n <= 3 components; larger data passes
 * trivially). bound <= 0 selects the NASHCONE_BRUTE_BOUND environment
 * variable, default 50. Returns NC_ERR_INTERNAL on any disagreement. */
NASHCONE_API nc_status nc_resolution_self_test(const nc_resolution* res, long bound);

NASHCONE_API void nc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* NASHCONE_H */
