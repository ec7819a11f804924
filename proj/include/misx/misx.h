#ifndef MISX_H
#define MISX_H

/*
 * misx - exact maximal-independent-set counting, matching/cover invariants,
 * Cameron-Walker recognition and bound verdicts for simple graphs.
 *
 * All functions return a misx_status; every non-OK status leaves a
 * human-readable message in misx_last_error() (thread-local). Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with misx_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum misx_status {
    MISX_OK = 0,
    MISX_ERROR_INPUT = 2,          /* malformed records, bad specs, bad args */
    MISX_ERROR_BUDGET = 3,         /* enumeration budget or limit exceeded */
    MISX_COUNTEREXAMPLE_FOUND = 4, /* a sweep found violating graphs */
    MISX_ERROR_UNSUPPORTED = 5,    /* valid input outside the supported range */
    MISX_ERROR_INTERNAL = 6        /* invariant violation inside the library */
} misx_status;

/* Opaque simple-graph handle. Immutable once created. */
typedef struct misx_graph misx_graph;

const char* misx_version(void);

/* Message for the most recent failing call on this thread. */
const char* misx_last_error(void);

/* ----- construction / destruction ----------------------------------- */

/* One graph6 record; ">>graph6<<" header and trailing newline tolerated. */
misx_status misx_graph_from_graph6(const char* record, misx_graph** out);

/* Edge-list text: "u v" per line, '#' comments, optional leading count. */
misx_status misx_graph_from_edge_list(const char* text, misx_graph** out);

/* format: "auto", "graph6" or "edgelist". */
misx_status misx_graph_from_text(const char* text, const char* format, misx_graph** out);

/* One graph from a family spec such as "star:m=4" or
 * "cw-bipartite:a=2,b=2,leaves=2,seed=1" (no ranges). */
misx_status misx_graph_from_family(const char* spec, misx_graph** out);

void misx_graph_free(misx_graph* g);

/* ----- basic accessors ----------------------------------------------- */

int32_t misx_graph_vertex_count(const misx_graph* g);
int64_t misx_graph_edge_count(const misx_graph* g);
misx_status misx_graph_to_graph6(const misx_graph* g, char** record_out);

void misx_string_free(char* s);

/* ----- computations --------------------------------------------------- */

/* Exact m(G) as a decimal string. budget = 0 selects the default (10^7)
 * cap on enumerated sets; exceeding it yields MISX_ERROR_BUDGET. */
misx_status misx_count_mis(const misx_graph* g, uint64_t budget, char** decimal_out);

/* Streams each maximal independent set as a sorted vertex array. limit = 0
 * selects the default budget; if more than `limit` sets exist the first
 * `limit` are delivered and MISX_ERROR_BUDGET is returned. */
typedef void (*misx_set_callback)(const int32_t* vertices, int32_t count, void* user);
misx_status misx_enumerate_mis(const misx_graph* g, uint64_t limit, misx_set_callback callback,
                               void* user);

/* Scalar invariants: alpha (independence), beta (cover), nu (matching),
 * nu0 (induced matching). Any out-pointer may be NULL. */
misx_status misx_invariants(const misx_graph* g, int32_t* alpha_out, int32_t* beta_out,
                            int32_t* nu_out, int32_t* nu0_out);

/* 1 if nu0(G) == nu(G) and G is bipartite, else 0. */
misx_status misx_is_cw_bipartite(const misx_graph* g, int32_t* result_out);

/* Full AnalysisReport as JSON (schema 1): input echo, invariant bundle with
 * certificates, Cameron-Walker certificate, all five theorem verdicts. */
misx_status misx_analyze_json(const misx_graph* g, uint64_t budget, char** json_out);

/* ----- generation ------------------------------------------------------ */

/* graph6 records for a family spec, one per line; integer parameters accept
 * "lo..hi" ranges which expand in row-major key order. */
misx_status misx_generate_graph6(const char* family_spec, char** lines_out);

/* ----- sweeps ----------------------------------------------------------- */

typedef struct misx_sweep_options {
    const char* theorems;       /* "all" (NULL means all) or comma-joined tags:
                                   COVER_BOUND, MATCHING_BOUND, INDUCED_LOWER,
                                   KE_COROLLARY, BRANCH_RECURRENCE */
    int32_t jobs;               /* worker threads; <= 1 single-threaded */
    int32_t census_cap;         /* extremal graph6 strings kept; <= 0 -> 64 */
    int32_t counterexample_cap; /* abort threshold; <= 0 -> 16 */
    int32_t max_enumeration_n;  /* all-labeled refusal limit; <= 0 -> 6 */
    uint64_t budget;            /* per-count enumeration budget; 0 -> 10^7 */
} misx_sweep_options;

/* Every sweep writes a SweepReport JSON (schema 1) and returns
 * MISX_COUNTEREXAMPLE_FOUND if any verdict failed. Reports are byte-identical
 * for any jobs value. options may be NULL for all defaults. */
misx_status misx_sweep_all_labeled(int32_t n, const misx_sweep_options* options, char** json_out);

/* text = one graph6 record per line; malformed lines are reported in the
 * JSON "skipped" list and do not fail the sweep. */
misx_status misx_sweep_graph6_text(const char* text, const char* description,
                                   const misx_sweep_options* options, char** json_out);

misx_status misx_sweep_family(const char* family_spec, const misx_sweep_options* options,
                              char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* MISX_H */
