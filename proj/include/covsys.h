/* covsys — exact covering systems over rings of integers of number fields.
 *
 * C API of the shared library. All objects are opaque handles created and
 * destroyed here; every fallible call returns a covsys_status, with a
 * human-readable message available from covsys_last_error() (thread-local,
 * valid until the next failing call on the same thread).
 *
 * Strings produced by the library (reports, JSON) are heap-allocated and
 * must be released with covsys_string_free().
 */
#ifndef COVSYS_H
#define COVSYS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum covsys_status {
    COVSYS_OK = 0,
    COVSYS_ERR_INVALID_ARGUMENT = 1,
    COVSYS_ERR_FIELD_MISMATCH = 2,
    COVSYS_ERR_ZERO_IDEAL = 3,
    COVSYS_ERR_CAP_EXCEEDED = 4,
    COVSYS_ERR_OVERFLOW = 5,
    COVSYS_ERR_UNSUPPORTED = 6,
    COVSYS_ERR_PARSE = 7,
    COVSYS_ERR_DOMAIN = 8,
    COVSYS_ERR_INTERNAL = 9
} covsys_status;

/* Exactness verdicts reported by covsys_system_verify. */
typedef enum covsys_verdict_kind {
    COVSYS_VERDICT_EXACT = 0,
    COVSYS_VERDICT_NOT_COVERING = 1,
    COVSYS_VERDICT_OVERLAP = 2
} covsys_verdict_kind;

typedef struct covsys_field covsys_field;
typedef struct covsys_ideal covsys_ideal;
typedef struct covsys_system covsys_system;

const char* covsys_version(void);
const char* covsys_last_error(void);
void covsys_string_free(char* s);

/* ---- number fields ---- */

covsys_status covsys_field_rationals(covsys_field** out);
/* d squarefree, not 0 or 1; standard quadratic integral basis. */
covsys_status covsys_field_quadratic(int64_t d, covsys_field** out);
int covsys_field_degree(const covsys_field* field);
void covsys_field_free(covsys_field* field);

/* ---- ideals ---- */

/* coords holds ngens rows of degree() coordinates each, row-major. */
covsys_status covsys_ideal_from_generators(const covsys_field* field, const int64_t* coords,
                                           size_t ngens, covsys_ideal** out);
/* out must hold degree()*degree() entries; receives the HNF row-major. */
covsys_status covsys_ideal_hnf(const covsys_ideal* ideal, int64_t* out);
covsys_status covsys_ideal_norm(const covsys_ideal* ideal, int64_t* out);
covsys_status covsys_ideal_sum(const covsys_ideal* a, const covsys_ideal* b, covsys_ideal** out);
covsys_status covsys_ideal_product(const covsys_ideal* a, const covsys_ideal* b,
                                   covsys_ideal** out);
covsys_status covsys_ideal_intersect(const covsys_ideal* a, const covsys_ideal* b,
                                     covsys_ideal** out);
/* 1, 0, or -1 on error. divides tests a | b. */
int covsys_ideal_equal(const covsys_ideal* a, const covsys_ideal* b);
int covsys_ideal_divides(const covsys_ideal* a, const covsys_ideal* b);
/* Largest prime-power-ideal norm dividing the ideal; 1 for the unit ideal. */
covsys_status covsys_ideal_big_g(const covsys_ideal* ideal, int64_t* out);
void covsys_ideal_free(covsys_ideal* ideal);

/* ---- covering systems ---- */

/* Parses {"field": ..., "classes": [{"rep": [...], "modulus_gens":
 * [[...], ...]}, ...]}. */
covsys_status covsys_system_parse(const char* json_text, covsys_system** out);
covsys_status covsys_system_to_json(const covsys_system* sys, char** out);
size_t covsys_system_class_count(const covsys_system* sys);
int covsys_system_field_degree(const covsys_system* sys);
void covsys_system_free(covsys_system* sys);

/* Brute-force exactness verdict over the residues of the common modulus
 * (at most cap of them; cap 0 means the default of 100000). witness, if
 * non-NULL, must hold field-degree entries and receives the first failing
 * residue; class_a/class_b receive the overlapping pair. */
covsys_status covsys_system_verify(const covsys_system* sys, size_t cap, int* kind,
                                   int64_t* witness, size_t* class_a, size_t* class_b);
/* Same verdict, rendered as one line of text. */
covsys_status covsys_system_verify_report(const covsys_system* sys, size_t cap, int* kind,
                                          char** out);
/* Per-class repetition-bound analysis of an exact system, as text or JSON
 * (see docs/analyze_schema.json). Fails with COVSYS_ERR_DOMAIN when the
 * system is not exact. */
covsys_status covsys_system_analyze(const covsys_system* sys, size_t cap, int as_json,
                                    char** out);
/* Per-residue digit-map images and per-class cell patterns. */
covsys_status covsys_system_map_dump(const covsys_system* sys, size_t cap, char** out);

/* ---- construction ---- */

/* Seeded refinement starting from a complete residue system: pool_primes
 * lists rational primes whose prime ideals above form the split pool.
 * Emits the system in the standard input JSON format. capped, if non-NULL,
 * is set to 1 when generation stopped early at the cap. */
covsys_status covsys_construct_random(const covsys_field* field, uint64_t seed, unsigned steps,
                                      const int64_t* pool_primes, size_t npool, size_t cap,
                                      int* capped, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* COVSYS_H */
