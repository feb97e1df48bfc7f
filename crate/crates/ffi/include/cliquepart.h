#ifndef CLIQUEPART_H
#define CLIQUEPART_H

/* Generated by cbindgen from cliquepart-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum CpStatus {
  CP_STATUS_OK = 0,
  CP_STATUS_NULL_POINTER = 1,
  CP_STATUS_INVALID_ARGUMENT = 2,
  CP_STATUS_PARSE_ERROR = 3,
  CP_STATUS_SIZE_CAP = 4,
  CP_STATUS_IO_ERROR = 5,
  CP_STATUS_UTF8_ERROR = 6,
  CP_STATUS_INTERNAL_PANIC = 7,
} CpStatus;

/**
 * Instance family selector.
 */
typedef enum CpFamily {
  CP_FAMILY_RANDOM = 0,
  CP_FAMILY_SPARSE = 1,
  CP_FAMILY_STRUCTURED = 2,
  CP_FAMILY_MODULARITY = 3,
} CpFamily;

/**
 * Formulation selector.
 */
typedef enum CpKind {
  CP_KIND_P = 0,
  CP_KIND_RP = 1,
  CP_KIND_MRP = 2,
  CP_KIND_CP = 3,
  CP_KIND_PCP = 4,
  CP_KIND_FRP = 5,
  CP_KIND_PFRP = 6,
  CP_KIND_XFRP = 7,
} CpKind;

/**
 * Solve engine selector.
 */
typedef enum CpEngine {
  CP_ENGINE_ORACLE = 0,
  CP_ENGINE_VECTORS = 1,
  CP_ENGINE_BNB = 2,
} CpEngine;

/**
 * Termination status of a solve.
 */
typedef enum CpSolveStatus {
  CP_SOLVE_STATUS_OPTIMAL = 0,
  CP_SOLVE_STATUS_NODE_LIMIT = 1,
  CP_SOLVE_STATUS_TIME_LIMIT = 2,
} CpSolveStatus;

/**
 * Opaque weighted instance handle.
 */
typedef struct CpInstance CpInstance;

/**
 * Opaque solve outcome handle.
 */
typedef struct CpSolveReport CpSolveReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Description of the most recent error on this thread. The pointer stays
 * valid until the next failing call on the same thread. Never null.
 */
const char *cp_last_error_message(void);

/**
 * Generates a random- or sparse-family instance (seeded, deterministic).
 *
 * # Safety
 * `out` must be a valid pointer to a `CpInstance*` slot.
 */
enum CpStatus cp_generate(enum CpFamily family, uint32_t n, uint64_t seed, struct CpInstance **out);

/**
 * Generates a structured instance with explicit cluster count and exact
 * within-cluster +1 probability `p_num / p_den`.
 *
 * # Safety
 * `out` must be a valid pointer to a `CpInstance*` slot.
 */
enum CpStatus cp_generate_structured(uint32_t n,
                                     uint32_t k_clusters,
                                     uint32_t p_num,
                                     uint32_t p_den,
                                     uint64_t seed,
                                     struct CpInstance **out);

/**
 * Generates a modularity instance from a preferential-attachment graph
 * with the given attachment parameter.
 *
 * # Safety
 * `out` must be a valid pointer to a `CpInstance*` slot.
 */
enum CpStatus cp_generate_modularity(uint32_t n,
                                     uint32_t ba_attach,
                                     uint64_t seed,
                                     struct CpInstance **out);

/**
 * Builds a custom instance from `n(n-1)/2` weights in pair-lex order
 * ((0,1), (0,2), ..., (n-2,n-1)).
 *
 * # Safety
 * `weights` must point to `len` readable values; `out` must be valid.
 */
enum CpStatus cp_instance_from_weights(uint32_t n,
                                       const int64_t *weights,
                                       size_t len,
                                       struct CpInstance **out);

/**
 * Reads an instance file in the native format.
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be valid.
 */
enum CpStatus cp_instance_read_file(const char *path, struct CpInstance **out);

/**
 * Writes the instance in the native byte-deterministic format.
 *
 * # Safety
 * `inst` must be a live handle; `path` a NUL-terminated string.
 */
enum CpStatus cp_instance_write_file(const struct CpInstance *inst, const char *path);

/**
 * Releases an instance handle. Null is a no-op.
 *
 * # Safety
 * `inst` must have been produced by this library and not yet freed.
 */
void cp_instance_free(struct CpInstance *inst);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `inst` must be null or a live handle.
 */
uint32_t cp_instance_vertex_count(const struct CpInstance *inst);

/**
 * Weight of the unordered pair `{i,j}`.
 *
 * # Safety
 * `inst` must be a live handle; `out` a valid slot.
 */
enum CpStatus cp_instance_weight(const struct CpInstance *inst,
                                 uint32_t i,
                                 uint32_t j,
                                 int64_t *out);

/**
 * Number of transitivity constraints the kind keeps on this instance.
 *
 * # Safety
 * `inst` must be a live handle; `out` a valid slot.
 */
enum CpStatus cp_count_constraints(const struct CpInstance *inst, enum CpKind kind, uint64_t *out);

/**
 * Total orientation count `n(n-1)(n-2)/2` for `n >= 3`.
 *
 * # Safety
 * `out` must be a valid slot.
 */
enum CpStatus cp_total_triples(uint32_t n, uint64_t *out);

/**
 * Writes the kind's LP model (CPLEX dialect) to `path`.
 *
 * # Safety
 * `inst` must be a live handle; `path` a NUL-terminated string.
 */
enum CpStatus cp_write_lp_file(const struct CpInstance *inst, enum CpKind kind, const char *path);

/**
 * Solves the instance. `node_limit` / `time_limit_ms` of 0 mean
 * unlimited (branch-and-bound only). The report's `value` is the
 * original-scale objective of the repaired (transitively closed) best
 * solution; `objective` is in the engine's own scale.
 *
 * # Safety
 * `inst` must be a live handle; `out` a valid slot.
 */
enum CpStatus cp_solve(const struct CpInstance *inst,
                       enum CpEngine engine,
                       enum CpKind kind,
                       uint64_t node_limit,
                       uint64_t time_limit_ms,
                       struct CpSolveReport **out);

/**
 * Releases a report handle. Null is a no-op.
 *
 * # Safety
 * `report` must have been produced by `cp_solve` and not yet freed.
 */
void cp_report_free(struct CpSolveReport *report);

/**
 * Original-scale objective of the repaired solution.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
int64_t cp_report_value(const struct CpSolveReport *report);

/**
 * Objective in the engine's own scale (perturbation-scaled for the
 * strict kinds under the vectors engine).
 *
 * # Safety
 * `report` must be null or a live handle.
 */
int64_t cp_report_objective(const struct CpSolveReport *report);

/**
 * # Safety
 * `report` must be null or a live handle.
 */
enum CpSolveStatus cp_report_status(const struct CpSolveReport *report);

/**
 * Nodes or vectors explored.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
uint64_t cp_report_explored(const struct CpSolveReport *report);

/**
 * Wall time of the solve in seconds.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
double cp_report_elapsed_secs(const struct CpSolveReport *report);

/**
 * Number of selected pairs in the unrepaired optimum.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
uint64_t cp_report_raw_edge_count(const struct CpSolveReport *report);

/**
 * Block count of the repaired partition.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
uint32_t cp_report_block_count(const struct CpSolveReport *report);

/**
 * Block id of `vertex` in the repaired partition (restricted-growth
 * labels: vertex 0 is in block 0).
 *
 * # Safety
 * `report` must be a live handle; `out` a valid slot.
 */
enum CpStatus cp_report_block_of(const struct CpSolveReport *report,
                                 uint32_t vertex,
                                 uint32_t *out);

/**
 * Exhaustively checks that the pair-sum reduction preserves the complete
 * optimal set of the full formulation (requires n <= 7).
 *
 * # Safety
 * `inst` must be a live handle; `holds` a valid slot.
 */
enum CpStatus cp_verify_optimal_set_equality(const struct CpInstance *inst, bool *holds);

/**
 * Checks that every optimum of the strict kind repairs to the oracle
 * optimum (requires n <= 7; kind should be mRP, pCP, or pFRP).
 *
 * # Safety
 * `inst` must be a live handle; `ok` a valid slot.
 */
enum CpStatus cp_verify_reduction_pipeline(const struct CpInstance *inst,
                                           enum CpKind kind,
                                           bool *ok);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLIQUEPART_H */
