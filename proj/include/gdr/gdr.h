#ifndef GDR_H
#define GDR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by every fallible entry point. On failure the
 * thread-local message from gdr_last_error() describes the cause. */
typedef enum gdr_status {
    GDR_OK = 0,
    GDR_ERROR_PARSE = 1,
    GDR_ERROR_INFEASIBLE = 2,
    GDR_ERROR_BOUND_NOT_CERTIFIED = 3,
    GDR_ERROR_INVALID_ARGUMENT = 4,
    GDR_ERROR_TOO_LARGE = 5,
    GDR_ERROR_INTERNAL = 6
} gdr_status;

typedef enum gdr_problem {
    GDR_PROBLEM_NONBLOCKER = 0,
    GDR_PROBLEM_HARMLESS = 1,
    GDR_PROBLEM_DIFFERENTIAL = 2,
    GDR_PROBLEM_KNONBLOCKER = 3
} gdr_problem;

/* GDR_FORMAT_AUTO is accepted by gdr_graph_parse (a DIMACS problem line
 * selects DIMACS, anything else is an edge list) but not by
 * gdr_graph_serialize. */
typedef enum gdr_format {
    GDR_FORMAT_DIMACS = 0,
    GDR_FORMAT_EDGELIST = 1,
    GDR_FORMAT_AUTO = 2
} gdr_format;

/* Opaque handles. Graphs are immutable once built; solutions are snapshots
 * owned by the caller until freed. */
typedef struct gdr_graph gdr_graph;
typedef struct gdr_solution gdr_solution;

/* Message for the most recent failing call on this thread; the empty string
 * after a success. The pointer stays valid until the next call. */
const char* gdr_last_error(void);

/* ---- graphs ---------------------------------------------------------- */

/* Parses DIMACS ("p edge n m" header, "e u v" lines, 1-based) or a plain
 * edge list ("u v" per line, '#' comments, single integers name isolated
 * vertices). */
gdr_status gdr_graph_parse(const char* text, gdr_format format, gdr_graph** out);

/* Builds a graph on vertices 0..n-1 from endpoint pairs
 * (endpoints[2i], endpoints[2i+1]). Rejects self-loops, duplicate edges,
 * and endpoints outside the vertex range. */
gdr_status gdr_graph_from_edges(int32_t n, const int32_t* endpoints,
                                size_t edge_count, gdr_graph** out);

void gdr_graph_free(gdr_graph* g);

int32_t gdr_graph_vertex_count(const gdr_graph* g);
int64_t gdr_graph_edge_count(const gdr_graph* g);

/* Serialized text round-trips through gdr_graph_parse. Free the string with
 * gdr_string_free. */
gdr_status gdr_graph_serialize(const gdr_graph* g, gdr_format format, char** out);

void gdr_string_free(char* s);

/* Erdos-Renyi graph on n vertices with edge probability edge_percent/100,
 * deterministic for a fixed seed. connected != 0 chains components together
 * afterwards. */
gdr_status gdr_random_graph(int32_t n, int32_t edge_percent, uint64_t seed,
                            int connected, gdr_graph** out);

/* d-regular graph via the pairing model; n*d must be even and d < n. */
gdr_status gdr_random_regular_graph(int32_t n, int32_t d, uint64_t seed,
                                    gdr_graph** out);

/* ---- solving --------------------------------------------------------- */

/* Runs the reduction pipeline for the problem and returns a feasible
 * solution meeting the problem's certified factor. k is consulted only for
 * GDR_PROBLEM_KNONBLOCKER and must be at least 2 there; pass 0 otherwise.
 * Fails with GDR_ERROR_INFEASIBLE when no feasible solution exists and
 * GDR_ERROR_BOUND_NOT_CERTIFIED when the factor cannot be certified. */
gdr_status gdr_solve(const gdr_graph* g, gdr_problem problem, int32_t k,
                     gdr_solution** out);

void gdr_solution_free(gdr_solution* s);

long gdr_solution_value(const gdr_solution* s);
size_t gdr_solution_size(const gdr_solution* s);

/* Vertex ids in ascending order; valid until the solution is freed. */
const int32_t* gdr_solution_vertices(const gdr_solution* s);

/* Nonzero when any component fell back from the heuristic to exact search. */
int gdr_solution_fallback_used(const gdr_solution* s);

/* Size-bound certificate as a JSON object; owned by the solution. */
const char* gdr_solution_certificate_json(const gdr_solution* s);

/* Reduction trace as a JSON object; owned by the solution. */
const char* gdr_solution_trace_json(const gdr_solution* s);

/* Optimum by exhaustive search. Fails with GDR_ERROR_TOO_LARGE beyond 20
 * vertices per component (24 for differential). */
gdr_status gdr_exact_value(const gdr_graph* g, gdr_problem problem, int32_t k,
                           int64_t* out);

/* Recomputes feasibility and value of a claimed solution. feasible_out is
 * 0 or 1; value_out is written only when feasible. */
gdr_status gdr_verify(const gdr_graph* g, gdr_problem problem, int32_t k,
                      const int32_t* vertices, size_t count,
                      int* feasible_out, int64_t* value_out);

/* ---- reduction and audit --------------------------------------------- */

/* Runs the problem's rules to fixpoint and returns a JSON object with the
 * step trace, totals, and the reduced graph in DIMACS text. Free with
 * gdr_string_free. */
gdr_status gdr_reduce(const gdr_graph* g, gdr_problem problem, int32_t k,
                      char** report_out);

/* Newline-separated ids of every reduction rule; knonblocker rules are
 * instantiated at k (k < 2 uses 2). Free with gdr_string_free. */
gdr_status gdr_rule_list(int32_t k, char** out);

/* Replays one rule over `graphs` generated instances it applies to, checking
 * its loss bound and lift contract against exhaustive optima. Returns a JSON
 * report with any violations. Free with gdr_string_free. */
gdr_status gdr_audit_rule(const char* rule_id, int32_t k, int32_t graphs,
                          uint64_t seed, char** report_out);

#ifdef __cplusplus
}
#endif

#endif
