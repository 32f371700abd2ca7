/* C interface to the empty4 library.
 *
 * Every fallible call returns an e4_status. On failure the message is kept
 * per thread and can be read with e4_last_error() until the next failing
 * call on that thread. Strings returned through char** are owned by the
 * caller and must be released with e4_string_free(). Handles are released
 * with their own _free function; passing NULL to any _free is a no-op.
 */
#ifndef EMPTY4_H
#define EMPTY4_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define E4_API __attribute__((visibility("default")))
#else
#define E4_API
#endif

typedef enum e4_status {
  E4_OK = 0,
  E4_INVALID_ARGUMENT = 1,
  E4_PARSE = 2,
  E4_SUM_NOT_ZERO = 3,
  E4_NOT_GENERATOR = 4,
  E4_NOT_A_UNIT = 5,
  E4_NOT_HOLLOW = 6,
  E4_NOT_EMPTY = 7,
  E4_NO_UNIT_ENTRY = 8,
  E4_NOT_CYCLIC = 9,
  E4_DEGENERATE = 10,
  E4_INDEX_MISMATCH = 11,
  E4_INVALID_PARAMS = 12,
  E4_VOLUME_TOO_LARGE = 13,
  E4_CHECKPOINT = 14,
  E4_INVARIANT_VIOLATION = 15,
  E4_IO = 16,
  E4_OUT_OF_MEMORY = 98,
  E4_INTERNAL = 99
} e4_status;

typedef struct e4_tuple e4_tuple;
typedef struct e4_simplex e4_simplex;
typedef struct e4_census e4_census;

E4_API const char* e4_version(void);
E4_API const char* e4_status_name(e4_status status);
E4_API const char* e4_last_error(void);
E4_API void e4_string_free(char* s);

/* ---- tuples ---- */

/* "V:b0,b1,b2,b3,b4"; entries may be any integers and are reduced mod V. */
E4_API e4_status e4_tuple_parse(const char* text, e4_tuple** out);
E4_API e4_status e4_tuple_create(int64_t volume, const int64_t* entries, size_t count, e4_tuple** out);
E4_API e4_status e4_tuple_clone(const e4_tuple* t, e4_tuple** out);
E4_API void e4_tuple_free(e4_tuple* t);

E4_API int64_t e4_tuple_volume(const e4_tuple* t);
E4_API size_t e4_tuple_size(const e4_tuple* t);
/* Copies min(size, capacity) residues; E4_INVALID_ARGUMENT if capacity is short. */
E4_API e4_status e4_tuple_residues(const e4_tuple* t, int64_t* out, size_t capacity);
E4_API e4_status e4_tuple_format(const e4_tuple* t, char** out);

E4_API e4_status e4_tuple_canonical(const e4_tuple* t, e4_tuple** out);
E4_API e4_status e4_tuple_unit_multiply(const e4_tuple* t, int64_t unit, e4_tuple** out);
E4_API e4_status e4_tuple_isomorphic(const e4_tuple* a, const e4_tuple* b, int* out);
E4_API e4_status e4_tuple_orbit_count(const e4_tuple* t, int* out);

/* ---- lattice-point oracles ---- */

E4_API e4_status e4_is_empty(const e4_tuple* t, int* out);
E4_API e4_status e4_is_hollow(const e4_tuple* t, int* out);
E4_API e4_status e4_coprime_condition(const e4_tuple* t, int* out);
E4_API e4_status e4_empty_via_facets(const e4_tuple* t, int* out);
/* Lattice points in the dilation n*Delta, vertices included. */
E4_API e4_status e4_count_lattice_points(const e4_tuple* t, int64_t dilation, uint64_t* out);
E4_API e4_status e4_facet_volumes(const e4_tuple* t, int64_t* out, size_t capacity);
/* Needs a 4-dimensional empty tuple; E4_NOT_EMPTY otherwise. */
E4_API e4_status e4_hstar(const e4_tuple* t, int64_t out[5]);

/* ---- coordinates ---- */

E4_API e4_status e4_simplex_parse(const char* text, e4_simplex** out);
E4_API e4_status e4_simplex_create(int dim, const int64_t* coords, e4_simplex** out);
E4_API void e4_simplex_free(e4_simplex* s);
E4_API int e4_simplex_dim(const e4_simplex* s);
/* (dim + 1) * dim coordinates, vertex after vertex. */
E4_API e4_status e4_simplex_coords(const e4_simplex* s, int64_t* out, size_t capacity);
E4_API e4_status e4_simplex_format(const e4_simplex* s, char** out);

E4_API e4_status e4_realize(const e4_tuple* t, e4_simplex** out);
/* E4_NOT_CYCLIC if the quotient group is not cyclic. */
E4_API e4_status e4_simplex_tuple(const e4_simplex* s, e4_tuple** out);
E4_API e4_status e4_simplex_volume(const e4_simplex* s, int64_t* out);
E4_API e4_status e4_simplex_width(const e4_simplex* s, int64_t* out);
E4_API e4_status e4_tuple_width(const e4_tuple* t, int64_t* out);

/* ---- classification ---- */

/* One line per outcome: "sporadic", "not-hollow", "not-empty", and
 * "family <label>" for every family the tuple belongs to. */
E4_API e4_status e4_classify(const e4_tuple* t, char** out);
E4_API e4_status e4_families_table(char** out);

/* ---- enumeration ---- */

typedef struct e4_search_config {
  int64_t v_min;
  int64_t v_max;
  int workers;             /* 0 or less: one worker */
  int sporadic_only;       /* nonzero: drop members of the infinite families */
  const char* checkpoint;  /* NULL or "": no checkpointing */
} e4_search_config;

E4_API e4_status e4_enumerate(const e4_search_config* cfg, e4_census** out);
/* Writes the census to path. With a checkpoint, an interrupted run resumes
 * from the last completed volume. */
E4_API e4_status e4_enumerate_to_file(const e4_search_config* cfg, const char* path);
E4_API e4_status e4_singularity_count(int64_t volume, int64_t* out);

/* ---- census files ---- */

/* normalize = 0: strict, rows must already be canonical, sorted and empty.
 * normalize != 0: rows are canonicalized, sorted and deduplicated. */
E4_API e4_status e4_census_read(const char* path, int normalize, e4_census** out);
E4_API e4_status e4_census_read_string(const char* text, int normalize, e4_census** out);
E4_API e4_status e4_census_write(const e4_census* c, const char* path);
E4_API e4_status e4_census_format(const e4_census* c, char** out);
E4_API void e4_census_free(e4_census* c);
E4_API size_t e4_census_size(const e4_census* c);
E4_API e4_status e4_census_row(const e4_census* c, size_t index, e4_tuple** out);

E4_API e4_status e4_census_histogram(const e4_census* c, int machine, char** out);
E4_API e4_status e4_census_widths(const e4_census* c, int machine, char** out);
E4_API e4_status e4_census_excess(const e4_census* c, int machine, char** out);
/* Rows present in only one of the two censuses; the counts may be NULL. */
E4_API e4_status e4_census_diff(const e4_census* a, const e4_census* b, int machine, char** out, size_t* only_a,
                                size_t* only_b);

#ifdef __cplusplus
}
#endif

#endif
