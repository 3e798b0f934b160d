/* qukit C API.
 *
 * Every call returns a qk_status. On failure the thread's last error message
 * is set and output pointers are left untouched. Strings returned through
 * char** are owned by the caller and released with qk_string_free. Handles
 * are released with their own *_free function; passing NULL is allowed.
 */
#ifndef QUKIT_QUKIT_H
#define QUKIT_QUKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(QUKIT_BUILDING)
#define QK_API __declspec(dllexport)
#else
#define QK_API __declspec(dllimport)
#endif
#else
#define QK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qk_status {
  QK_OK = 0,
  QK_ERR_INVALID_ARGUMENT = 1,
  QK_ERR_PARSE = 2,
  QK_ERR_BASE_MISMATCH = 3,
  QK_ERR_NOT_REPRESENTABLE = 4,
  QK_ERR_CANNOT_ALIGN = 5,
  QK_ERR_DIMENSION_MISMATCH = 6,
  QK_ERR_NOT_CAUCHY = 7,
  QK_ERR_INVALID_SPACING = 8,
  QK_ERR_INDEX_OUT_OF_RANGE = 9,
  QK_ERR_UNKNOWN_FRAME = 10,
  QK_ERR_LATTICE_TOO_LARGE = 11,
  QK_ERR_LATTICE_MISMATCH = 12,
  QK_ERR_IMAGE_MISMATCH = 13,
  QK_ERR_NOT_NORMALIZED = 14,
  QK_ERR_CONFIG = 15,
  QK_ERR_INTERNAL = 16
} qk_status;

/* Error name such as "InvalidSpacing"; "OK" for QK_OK. Static storage. */
QK_API const char* qk_status_name(qk_status status);
/* Message of the last failed call on this thread; empty when none. */
QK_API const char* qk_last_error(void);
QK_API const char* qk_version(void);
QK_API void qk_string_free(char* s);

/* ---- numerals ---------------------------------------------------------- */

typedef struct qk_numeral qk_numeral;

/* Compact text such as "12-71" in base k. */
QK_API qk_status qk_numeral_parse(const char* text, int k, qk_numeral** out);
/* Record {"k", "gamma", "digits", "m"}. */
QK_API qk_status qk_numeral_from_json(const char* json, qk_numeral** out);
/* Rational text "n/d", "n" or a decimal; trimmed result. */
QK_API qk_status qk_numeral_encode(const char* rational, int k, qk_numeral** out);
QK_API void qk_numeral_free(qk_numeral* a);

QK_API qk_status qk_numeral_format(const qk_numeral* a, char** out);
QK_API qk_status qk_numeral_to_json(const qk_numeral* a, char** out);
/* Exact value as "n" or "n/d". */
QK_API qk_status qk_numeral_value(const qk_numeral* a, char** out);
QK_API qk_status qk_numeral_energy(const qk_numeral* a, const char* model, double scale, double* out);

QK_API qk_status qk_numeral_trim(const qk_numeral* a, qk_numeral** out);
QK_API qk_status qk_numeral_pad(const qk_numeral* a, int length, int point, qk_numeral** out);
QK_API qk_status qk_numeral_add(const qk_numeral* a, const qk_numeral* b, qk_numeral** out);
QK_API qk_status qk_numeral_sub(const qk_numeral* a, const qk_numeral* b, qk_numeral** out);
QK_API qk_status qk_numeral_abs(const qk_numeral* a, qk_numeral** out);
QK_API qk_status qk_numeral_succ(const qk_numeral* a, qk_numeral** out);
QK_API qk_status qk_numeral_pred(const qk_numeral* a, qk_numeral** out);
/* -1, 0 or 1 by value. */
QK_API qk_status qk_numeral_cmp(const qk_numeral* a, const qk_numeral* b, int* out);
/* 1 when the values are equal. */
QK_API qk_status qk_numeral_eq_arith(const qk_numeral* a, const qk_numeral* b, int* out);
/* Conversion record with the expansion in base `target`. */
QK_API qk_status qk_numeral_convert_base(const qk_numeral* a, int target, char** json_out);

/* ---- superpositions ---------------------------------------------------- */

typedef struct qk_superposition qk_superposition;

/* [{"label": record, "re", "im"}, ...] */
QK_API qk_status qk_superposition_from_json(const char* json, int allow_unnormalized, qk_superposition** out);
QK_API void qk_superposition_free(qk_superposition* s);
QK_API qk_status qk_superposition_to_json(const qk_superposition* s, char** out);
QK_API qk_status qk_superposition_norm2(const qk_superposition* s, double* out);
QK_API qk_status qk_superposition_inner(const qk_superposition* a, const qk_superposition* b, double* re,
                                        double* im);
QK_API qk_status qk_superposition_prob_close(const qk_superposition* a, const qk_superposition* b, int ell,
                                             double* out);

/* ---- sequences --------------------------------------------------------- */

typedef struct qk_sequence qk_sequence;

/* Descriptor {"family": constant|truncation|alternating|superposed|padded, ...}. */
QK_API qk_status qk_sequence_from_json(const char* json, qk_sequence** out);
QK_API void qk_sequence_free(qk_sequence* s);
QK_API qk_status qk_cauchy_test(const qk_sequence* s, int ell_max, int p_max, char** json_out);
QK_API qk_status qk_cauchy_prob(const qk_sequence* s, int ell_max, int p_max, double* out);
QK_API qk_status qk_equivalent(const qk_sequence* a, const qk_sequence* b, int ell_max, int p_max,
                               char** json_out);
QK_API qk_status qk_canonical(const qk_sequence* s, int n, int p_max, qk_numeral** out);
QK_API qk_status qk_energy_sequence(const qk_sequence* s, const char* model, double scale, int n_max,
                                    int tail_start, double tolerance, char** json_out);

/* ---- frames and lattices ----------------------------------------------- */

typedef struct qk_lattice qk_lattice;
typedef struct qk_frame_graph qk_frame_graph;

QK_API qk_status qk_lattice_create(int j, int k, const char* g, int length, int point, int dims,
                                   qk_lattice** out);
QK_API void qk_lattice_free(qk_lattice* lat);
QK_API qk_status qk_lattice_to_json(const qk_lattice* lat, char** out);
QK_API qk_status qk_lattice_point_location(const qk_lattice* lat, const uint64_t* space, size_t n,
                                           uint64_t time, char** json_out);
/* Parent-frame image state of lattice index `index`. */
QK_API qk_status qk_lattice_image_component(const qk_lattice* lat, uint64_t index, qk_numeral** out);

/* {"topology": {...}, "frames": [{"j", "k", "g", "gauge"?}, ...]} */
QK_API qk_status qk_frame_graph_from_json(const char* json, qk_frame_graph** out);
QK_API void qk_frame_graph_free(qk_frame_graph* g);
QK_API qk_status qk_frame_graph_visible(const qk_frame_graph* g, const char* observer_json,
                                        const char* target_json, int* out);

/* ---- commands ---------------------------------------------------------- */

/* Runs a named command on a JSON config; output is JSON lines. */
QK_API qk_status qk_run(const char* command, const char* config_json, char** jsonl_out);

#ifdef __cplusplus
}
#endif

#endif
