#ifndef SNARKCRIT_SNARKCRIT_H
#define SNARKCRIT_SNARKCRIT_H

/*
 * C interface to the snark criticality toolkit.
 *
 * Graphs are opaque handles created by the snk_graph_* constructors and
 * released with snk_graph_free. Every fallible call returns an snk_status;
 * on failure snk_last_error() describes the problem. The message is stored
 * per thread and stays valid until the next failing call on that thread.
 *
 * Strings returned through `char **` out-parameters are owned by the caller
 * and must be released with snk_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(SNK_BUILDING_LIBRARY)
#define SNK_API __attribute__((visibility("default")))
#else
#define SNK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct snk_graph snk_graph;

typedef enum snk_status {
  SNK_OK = 0,
  SNK_ERR_INVALID_ARGUMENT = 1,
  SNK_ERR_PARSE = 2,
  SNK_ERR_GRAPH = 3,
  SNK_ERR_UNSUPPORTED = 4,
  SNK_ERR_PRECONDITION = 5, /* e.g. the graph is not a snark */
  SNK_ERR_CONSISTENCY = 6,  /* two independent routes disagreed: a library bug */
  SNK_ERR_INTERNAL = 7
} snk_status;

typedef enum snk_format { SNK_FORMAT_CSV = 0, SNK_FORMAT_JSONL = 1 } snk_format;

/* Marker for a dangling endpoint in snk_graph_from_edges. */
#define SNK_DANGLING (-1)

/* Tri-state values in records: 1 true, 0 false, -1 refused or undefined. */
#define SNK_UNDEFINED (-1)

SNK_API const char *snk_last_error(void);
SNK_API const char *snk_version(void);

/* error_offset (optional) receives the byte offset of a parse error. */
SNK_API snk_status snk_graph_from_graph6(const char *text, snk_graph **out, size_t *error_offset);
SNK_API snk_status snk_graph_named(const char *name, snk_graph **out);
/* endpoints holds 2 * edge_count vertex ids; SNK_DANGLING marks a dangling end. */
SNK_API snk_status snk_graph_from_edges(int32_t vertex_count, const int32_t *endpoints,
                                        size_t edge_count, snk_graph **out);
SNK_API void snk_graph_free(snk_graph *graph);

SNK_API int32_t snk_graph_order(const snk_graph *graph);
SNK_API int32_t snk_graph_size(const snk_graph *graph);
SNK_API snk_status snk_graph_to_graph6(const snk_graph *graph, char **out);
SNK_API snk_status snk_graph_expand_triangle(const snk_graph *graph, int32_t vertex,
                                             snk_graph **out);
SNK_API void snk_string_free(char *text);

/* Non-zero when the graph is a snark; negative on error. */
SNK_API int snk_is_snark(const snk_graph *graph);

typedef struct snk_record {
  uint64_t graph_index;
  int32_t order;
  int8_t is_snark;
  int32_t girth; /* SNK_UNDEFINED for an acyclic graph */
  int32_t cyclic_edge_connectivity;
  int8_t is_critical;
  int8_t is_bicritical;
  int8_t is_strictly_critical;
  int8_t is_4_edge_critical;
  int8_t is_4_vertex_critical;
  int8_t is_strong;
  int64_t coloring_path_micros;
  int64_t flow_path_micros;
} snk_record;

SNK_API snk_status snk_classify(const snk_graph *graph, uint64_t graph_index, snk_record *out);

typedef struct snk_local_certificate {
  uint64_t pairs;
  uint64_t consistent_pairs;
  uint64_t degenerate_pairs;
  uint64_t adjacent_pairs;
  int32_t first_bad_u; /* -1 when every pair agrees */
  int32_t first_bad_v;
} snk_local_certificate;

/* Checks the six local statements on every vertex pair of a snark. */
SNK_API snk_status snk_verify_local(const snk_graph *graph, snk_local_certificate *out);

typedef struct snk_coincidence_certificate {
  int8_t critical;
  int8_t four_edge_critical;
  int8_t bicritical;
  int8_t four_vertex_critical;
  int8_t holds;
  int64_t coloring_path_micros;
  int64_t flow_path_micros;
} snk_coincidence_certificate;

SNK_API snk_status snk_verify_coincidence(const snk_graph *graph,
                                          snk_coincidence_certificate *out);

typedef struct snk_strong_certificate {
  int8_t via_suppression;
  int8_t via_pairs;
  int8_t agree;
  uint64_t non_suppressible_edges;
} snk_strong_certificate;

SNK_API snk_status snk_verify_strong(const snk_graph *graph, snk_strong_certificate *out);

/* Serializes records in order; CSV output starts with the header row. */
SNK_API snk_status snk_write_records(const snk_record *records, size_t count, snk_format format,
                                     int include_timings, char **out, size_t *length);

#ifdef __cplusplus
}
#endif

#endif /* SNARKCRIT_SNARKCRIT_H */
