#ifndef CHILAB_H
#define CHILAB_H

/* C boundary of the certificate laboratory. Handles are opaque,
 * results are JSON strings owned by the caller, and every entry point
 * reports failure through a status code plus a thread-local message. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct chilab_graph chilab_graph;

typedef enum chilab_status {
  CHILAB_OK = 0,
  CHILAB_ERR_ARGUMENT = 1,
  CHILAB_ERR_RANGE = 2,
  CHILAB_ERR_PARSE = 3,
  CHILAB_ERR_CAPACITY = 4,
  CHILAB_ERR_PRECONDITION = 5,
  CHILAB_ERR_UNSUPPORTED = 6,
  CHILAB_ERR_STRUCTURE = 7,
  CHILAB_ERR_IO = 8,
  CHILAB_ERR_INTERNAL = 9
} chilab_status;

/* Largest vertex count a graph handle accepts. */
int chilab_max_vertices(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* chilab_last_error(void);

/* Builds a graph from one graph6 line (optional ">>graph6<<" header). */
chilab_status chilab_graph_from_graph6(const char* text, chilab_graph** out);

/* endpoints holds edge_count (u,v) pairs, flattened. */
chilab_status chilab_graph_from_edges(int order, const int* endpoints,
                                      size_t edge_count, chilab_graph** out);

void chilab_graph_free(chilab_graph* g);
int chilab_graph_order(const chilab_graph* g);

/* Invariant panel: order, chi, omega, alpha, tau, perfection, holes. */
chilab_status chilab_analyze(const chilab_graph* g, char** json_out);

/* Runs the named extractor. params_json may be NULL or "{}"; knobs:
 * s, q, k, t, n, ell, c, s_prime, direct_cap (integers), psi (array
 * of nonnegative coefficients, constant first), forced (bool). The
 * result carries the certificate and its independent verdict. */
chilab_status chilab_extract(const chilab_graph* g, const char* op,
                             const char* params_json, char** json_out);

/* Re-derives every claim of a serialized certificate against g. */
chilab_status chilab_verify(const chilab_graph* g,
                            const char* certificate_json, char** json_out);

/* Runs a sweep op over a corpus. graph6_lines may list one graph per
 * line; when NULL or empty the corpus comes from options_json:
 *   {"corpus": {"exhaustive": n}}              all labeled graphs on n
 *   {"corpus": {"random": {"count": c, "n_max": m}}}  seeded random
 * plus "seed", "workers", and "params" for the op itself. */
chilab_status chilab_sweep(const char* op, const char* graph6_lines,
                           const char* options_json, char** json_out);

/* Names of the available extract resp. sweep operations, one per line. */
chilab_status chilab_list_ops(char** json_out);

void chilab_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* CHILAB_H */
