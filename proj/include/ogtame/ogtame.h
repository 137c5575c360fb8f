/* Copyright 2026 the ogtame authors */
/* SPDX-License-Identifier: Apache-2.0 */

/*
 * C interface to the ogtame workbench: exact standard-part maps, tameness
 * certificates, cross-section checks, and induced valuations on Hahn series
 * fields over the rationals and real quadratic extensions.
 *
 * Usage model: build a scenario (definitions of the field, ambient groups,
 * subgroups, morphisms, and monomial groups, plus an optional query list)
 * from JSON, then either run its query list or run one ad-hoc query against
 * its definitions.  Results carry a human-readable text report and a
 * machine-readable JSON report; both are deterministic for a fixed scenario,
 * seed, and case budget.
 *
 * All functions return an ogt_status.  On failure, ogt_last_error() holds a
 * message for the calling thread until the next ogtame call on that thread.
 * Out-parameters are written only on OGT_OK; every handle returned through an
 * out-parameter must be released with the matching *_free function.  Strings
 * returned by accessor functions stay owned by their handle and remain valid
 * until the handle is freed.
 */

#ifndef OGTAME_OGTAME_H
#define OGTAME_OGTAME_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define OGT_VERSION_STRING "1.0.0"

/*
 * Status codes; 0 means success.  Nonzero values mirror the library's error
 * taxonomy and are append-only: existing values never change meaning.
 */
typedef enum ogt_status {
  OGT_OK = 0,
  OGT_PARSE_ERROR = 1,            /* malformed textual input */
  OGT_SCHEMA_ERROR = 2,           /* structurally invalid scenario or query */
  OGT_UNRESOLVED_NAME = 3,        /* reference to an undefined named object */
  OGT_FIELD_MISMATCH = 4,         /* scalar outside the declared field */
  OGT_CONTEXT_MISMATCH = 5,       /* operands from different ambients */
  OGT_DIMENSION_MISMATCH = 6,     /* wrong coordinate or matrix dimensions */
  OGT_DIVISION_BY_ZERO = 7,
  OGT_ZERO_ELEMENT = 8,           /* operation undefined at zero */
  OGT_NON_DIVISIBLE_SUBGROUP = 9, /* operation requires a Q-span */
  OGT_NON_POSITIVE = 10,          /* operation requires a positive argument */
  OGT_NOT_IN_VALUATION_RING = 11,
  OGT_PRECISION_EXCEEDED = 12,    /* truncated comparison was undecidable */
  OGT_UNSUPPORTED_OPERATION = 13, /* outside the exact decision procedures */
  OGT_BUDGET_EXHAUSTED = 14,      /* iteration bound hit before an answer */
  OGT_ORACLE_DISAGREEMENT = 15,   /* internal cross-check failed */
  OGT_IO_ERROR = 16,
  OGT_INTERNAL = 17
} ogt_status;

/* Opaque handles. */
typedef struct ogt_scenario ogt_scenario;
typedef struct ogt_report ogt_report;

/* Options shared by every run; initialize with ogt_run_options_init. */
typedef struct ogt_run_options {
  uint64_t seed; /* base seed for all sampled checks (default 10) */
  long cases;    /* default sample budget per check (default 200) */
  int fail_fast; /* nonzero: stop after the first failing query */
} ogt_run_options;

/* Library version as a string, e.g. "1.0.0". */
const char* ogt_version(void);

/* Stable lowercase name for a status value, e.g. "schema_error". */
const char* ogt_status_name(int status);

/*
 * Message of the most recent failure on the calling thread; the empty string
 * after a success.  The pointer is invalidated by the next ogtame call on
 * the same thread.
 */
const char* ogt_last_error(void);

/* Fills opt with the defaults listed above.  NULL is ignored. */
void ogt_run_options_init(ogt_run_options* opt);

/*
 * Parses a scenario from JSON text.  name labels the scenario in reports.
 * Validates the schema version, the field, and every definition; morphism
 * definitions are rejected if any stage fails the order-preservation check.
 */
ogt_status ogt_scenario_parse(const char* json_text, const char* name,
                              ogt_scenario** out);

/* Reads a file and parses it as a scenario named after the file stem. */
ogt_status ogt_scenario_load_file(const char* path, ogt_scenario** out);

void ogt_scenario_free(ogt_scenario* sc);

/* Number of queries in the scenario's own query list. */
long ogt_scenario_query_count(const ogt_scenario* sc);

/*
 * Runs the scenario's query list.  Individual property failures and
 * expectation mismatches are recorded in the report (all_pass becomes 0);
 * only malformed input, unresolved names, and similar errors return a
 * nonzero status.  opt may be NULL for defaults.
 */
ogt_status ogt_scenario_run(const ogt_scenario* sc,
                            const ogt_run_options* opt, ogt_report** out);

/*
 * Runs one ad-hoc query against the scenario's definitions, ignoring the
 * scenario's own query list.  query_json is a single query object in the
 * same form as an entry of the scenario's "queries" array, e.g.
 *   {"op": "decide-tame", "subgroup": "S"}
 */
ogt_status ogt_scenario_query(const ogt_scenario* sc, const char* query_json,
                              const ogt_run_options* opt, ogt_report** out);

void ogt_report_free(ogt_report* r);

/* Human-readable report, newline-terminated. */
const char* ogt_report_text(const ogt_report* r);

/* Machine-readable JSON report (versioned schema), newline-terminated. */
const char* ogt_report_json(const ogt_report* r);

/* 1 if every query passed (properties held and expectations matched). */
int ogt_report_all_pass(const ogt_report* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* OGTAME_OGTAME_H */
