/* C interface to the level tree engine: opaque tree handles, status codes,
 * and library-owned strings released with lt_string_free. */
#ifndef LEVELTREE_LEVELTREE_H
#define LEVELTREE_LEVELTREE_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(LT_BUILDING_LIBRARY)
#define LT_API __attribute__((visibility("default")))
#else
#define LT_API
#endif

typedef enum lt_status {
  LT_OK = 0,
  LT_ERR_PARSE = 1,         /* malformed input text */
  LT_ERR_STRUCTURE = 2,     /* not a rooted tree, unknown vertex or edge */
  LT_ERR_INVALID_LEVEL = 3, /* level map violates the level tree conditions */
  LT_ERR_DOMAIN = 4,        /* operation outside its domain */
  LT_ERR_ILL_DEFINED = 5,   /* negative power of a vanishing coordinate */
  LT_ERR_VERIFICATION = 6,  /* an asserted identity failed */
  LT_ERR_LIMIT = 7,         /* input exceeds a configured bound */
  LT_ERR_ARGUMENT = 8,      /* null or otherwise unusable argument */
  LT_ERR_INTERNAL = 9
} lt_status;

typedef enum lt_format {
  LT_FORMAT_TEXT = 0,
  LT_FORMAT_JSON = 1,
  LT_FORMAT_DOT = 2 /* lt_contract only: the contracted tree as Graphviz */
} lt_format;

typedef struct lt_tree lt_tree;

/* Version string, e.g. "1.0.0". Static storage. */
LT_API const char* lt_version(void);
/* Symbolic name of a status code. Static storage. */
LT_API const char* lt_status_name(lt_status s);
/* Message of the last failing call on this thread; "" after success. */
LT_API const char* lt_last_error(void);

/* Frees a string returned through an out parameter; null is ignored. */
LT_API void lt_string_free(char* s);

/* Trees. The JSON document carries root, parents, weights and optionally
 * levels and special. */
LT_API lt_status lt_tree_from_json(const char* json, lt_tree** out);
LT_API lt_status lt_tree_load(const char* path, lt_tree** out);
LT_API void lt_tree_free(lt_tree* t);
LT_API lt_status lt_tree_to_json(const lt_tree* t, char** out);
LT_API lt_status lt_tree_to_dot(const lt_tree* t, char** out);
LT_API int lt_tree_has_levels(const lt_tree* t);

/* Reports. special is a list "level:vertex,..." overriding the document's
 * choice; null or "" keeps it. */
LT_API lt_status lt_indices_report(const lt_tree* t, const char* special, lt_format format, char** out);
/* levels_csv "-1,-2" and edges_csv "e1,e2" select I; either may be null. */
LT_API lt_status lt_contract(const lt_tree* t, const char* levels_csv, const char* edges_csv,
                             lt_format format, char** out);
LT_API lt_status lt_chart_report(const lt_tree* t, const char* special, lt_format format, char** out);
LT_API lt_status lt_blowup_report(const lt_tree* t, const char* special, lt_format format, char** out);

/* Runs a suite on one tree: index, charts, transitions, blowup, remark or
 * all. *passed is set to 1 when every check holds. */
LT_API lt_status lt_verify(const lt_tree* t, const char* suite, const char* special, lt_format format,
                           int* passed, char** out);

/* Enumeration. spec_json holds max_edges, max_weight, max_levels,
 * require_positive_weight and stable, each optional; null means defaults.
 * With count_only the output is a JSON object of totals, otherwise one tree
 * document per line. */
LT_API lt_status lt_enumerate(const char* spec_json, int count_only, char** out);
/* Runs contraction, charts, transitions, blowup or remark over every
 * enumerated instance. The JSON report carries no timings. */
LT_API lt_status lt_run_suite(const char* suite, const char* spec_json, lt_format format,
                              int* passed, char** out);

#ifdef __cplusplus
}
#endif

#endif
