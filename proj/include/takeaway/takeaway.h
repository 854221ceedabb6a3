#ifndef TAKEAWAY_TAKEAWAY_H
#define TAKEAWAY_TAKEAWAY_H

/*
 * C interface to the Take-Away hypergraph game engine.
 *
 * Objects are opaque handles created by tk_*_create / tk_*_parse and released
 * with the matching tk_*_free. Every fallible call returns a tk_status; on
 * failure tk_last_error() describes the problem (per calling thread).
 * Strings handed out through char** parameters are owned by the caller and
 * released with tk_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TAKEAWAY_BUILDING)
#    define TAKEAWAY_API __declspec(dllexport)
#  else
#    define TAKEAWAY_API __declspec(dllimport)
#  endif
#else
#  define TAKEAWAY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tk_status {
  TK_OK = 0,
  TK_ERR_INVALID_ARGUMENT = 1,
  TK_ERR_MALFORMED = 2,         /* document is not a valid instance */
  TK_ERR_UNKNOWN_VERTEX = 3,    /* edge names an undeclared vertex */
  TK_ERR_INVALID_POSITION = 4,  /* vertex/edge invariants violated */
  TK_ERR_ILLEGAL_MOVE = 5,
  TK_ERR_SIZE_BOUND = 6,
  TK_ERR_PRECONDITION = 7,
  TK_ERR_IO = 8,
  TK_ERR_INTERNAL = 9
} tk_status;

typedef enum tk_report_format { TK_REPORT_CSV = 0, TK_REPORT_JSON = 1 } tk_report_format;

typedef struct tk_position tk_position;
typedef struct tk_solver tk_solver;
typedef struct tk_verification tk_verification;
typedef struct tk_service tk_service;

TAKEAWAY_API const char* tk_version(void);
TAKEAWAY_API const char* tk_status_name(tk_status status);
TAKEAWAY_API const char* tk_last_error(void);
TAKEAWAY_API void tk_string_free(char* s);

/* Positions ------------------------------------------------------------- */

TAKEAWAY_API tk_status tk_position_parse(const char* text, size_t length, tk_position** out);
TAKEAWAY_API tk_status tk_position_load(const char* path, tk_position** out);
TAKEAWAY_API void tk_position_free(tk_position* p);
TAKEAWAY_API size_t tk_position_vertex_count(const tk_position* p);
TAKEAWAY_API size_t tk_position_edge_count(const tk_position* p);
TAKEAWAY_API tk_status tk_position_serialize(const tk_position* p, char** out);

/* Structure report, lemma checks and closed-form prediction as one JSON
 * document. *out_conforming is set to 1 when the instance has no
 * requirement violations. */
TAKEAWAY_API tk_status tk_analyze(const tk_position* p, char** out_json, int* out_conforming);

/* Solver ------------------------------------------------------------------ */

typedef struct tk_solver_options {
  int memoize;          /* nonzero: use the transposition table */
  int iso_reduce;       /* nonzero: key the table by isomorphism class */
  size_t max_vertices;  /* 0 selects the default bound of 16 */
} tk_solver_options;

typedef struct tk_table_stats {
  uint64_t hits;
  uint64_t misses;
  uint64_t entries;
} tk_table_stats;

TAKEAWAY_API tk_status tk_solver_create(const tk_solver_options* options, tk_solver** out);
TAKEAWAY_API void tk_solver_free(tk_solver* s);

/* {"value", "options":[{"move","value"}], "winning_moves":[...]} */
TAKEAWAY_API tk_status tk_solve(tk_solver* s, const tk_position* p, char** out_json);
TAKEAWAY_API tk_status tk_grundy_value(tk_solver* s, const tk_position* p, unsigned* out_value);
TAKEAWAY_API tk_status tk_solver_stats(const tk_solver* s, tk_table_stats* out);

/* Enumeration and verification ------------------------------------------- */

typedef struct tk_bounds {
  size_t min_half_size;
  size_t max_half_size;
  int iso_dedup;
} tk_bounds;

TAKEAWAY_API tk_status tk_enumerate_count(const tk_bounds* bounds, size_t* out_count);

/* One serialized instance per line. */
TAKEAWAY_API tk_status tk_enumerate(const tk_bounds* bounds, char** out_lines);

typedef struct tk_verify_options {
  size_t threads;  /* 0 or 1: single-threaded */
  int iso_reduce;
} tk_verify_options;

typedef struct tk_verify_counts {
  size_t total;
  size_t matches;
  size_t mismatches;
  size_t no_predictions;
} tk_verify_counts;

TAKEAWAY_API tk_status tk_verify_run(const tk_bounds* bounds, const tk_verify_options* options,
                                     tk_verification** out);
TAKEAWAY_API void tk_verification_free(tk_verification* v);
TAKEAWAY_API tk_status tk_verification_counts(const tk_verification* v, tk_verify_counts* out);
TAKEAWAY_API tk_status tk_verification_summary(const tk_verification* v, char** out_text);
TAKEAWAY_API tk_status tk_verification_report(const tk_verification* v, tk_report_format format,
                                              int mismatches_only, char** out);

/* Writes one instance file per mismatch into out_dir (created on demand). */
TAKEAWAY_API tk_status tk_verification_write_mismatches(const tk_verification* v,
                                                        const char* out_dir,
                                                        size_t* out_written);

/* Game service ------------------------------------------------------------ */

TAKEAWAY_API tk_status tk_service_create(int auto_reply, size_t max_vertices, tk_service** out);
TAKEAWAY_API void tk_service_free(tk_service* s);

/* Dispatches one request of the game wire protocol. The response body is
 * always a JSON document; *out_http_status carries the HTTP status. Protocol
 * errors are reported in the body, not through the return value. */
TAKEAWAY_API tk_status tk_service_handle(tk_service* s, const char* method, const char* path,
                                         const char* body, size_t body_length,
                                         int* out_http_status, char** out_body);

#ifdef __cplusplus
}
#endif

#endif /* TAKEAWAY_TAKEAWAY_H */
