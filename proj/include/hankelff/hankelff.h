/*
 * hankelff - exact Hankel-matrix and divisor-variance verification over
 * finite fields. C interface to the shared library: opaque handles, integer
 * error codes, JSON documents for structured results. Strings returned
 * through char** out-parameters are heap-allocated; release them with
 * hankelff_string_free.
 */

#ifndef HANKELFF_H
#define HANKELFF_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define HANKELFF_OK 0
#define HANKELFF_ERR_INVALID_ARGUMENT 1
#define HANKELFF_ERR_NOT_PRIME 2
#define HANKELFF_ERR_NOT_IRREDUCIBLE 3
#define HANKELFF_ERR_DEGREE_MISMATCH 4
#define HANKELFF_ERR_FIELD_MISMATCH 5
#define HANKELFF_ERR_DIVISION_BY_ZERO 6
#define HANKELFF_ERR_SHAPE_MISMATCH 7
#define HANKELFF_ERR_NOT_COPRIME 8
#define HANKELFF_ERR_BOUND_VIOLATION 9
#define HANKELFF_ERR_BUDGET_EXCEEDED 10
#define HANKELFF_ERR_NOT_APPLICABLE 11
#define HANKELFF_ERR_IO 12
#define HANKELFF_ERR_SCHEMA_MISMATCH 13
#define HANKELFF_ERR_EXTENSION_FIELD_UNSUPPORTED 14
#define HANKELFF_ERR_BAD_CONFIG 15
#define HANKELFF_ERR_INTERNAL 16
#define HANKELFF_ERR_NOMEM 17

const char* hankelff_version(void);
/* static description of an error code; never NULL */
const char* hankelff_strerror(int code);
/* message of the most recent failing call on this thread, or "" */
const char* hankelff_last_error_message(void);

void hankelff_string_free(char* s);

/* ---- finite fields ----------------------------------------------------- */

typedef struct hankelff_field hankelff_field;

/* modulus may be NULL (auto-select); coefficients low to high, length e+1 */
int hankelff_field_new(uint32_t p, uint32_t e, const uint32_t* modulus, size_t modulus_len,
                       hankelff_field** out);
void hankelff_field_free(hankelff_field* f);
uint64_t hankelff_field_order(const hankelff_field* f);
int hankelff_field_json(const hankelff_field* f, char** json_out);

/* element codes are 0..q-1 in enumeration order; 0 and 1 are the identities */
int hankelff_elem_add(const hankelff_field* f, uint32_t a, uint32_t b, uint32_t* out);
int hankelff_elem_sub(const hankelff_field* f, uint32_t a, uint32_t b, uint32_t* out);
int hankelff_elem_mul(const hankelff_field* f, uint32_t a, uint32_t b, uint32_t* out);
int hankelff_elem_inv(const hankelff_field* f, uint32_t a, uint32_t* out);

/* ---- sequence analysis -------------------------------------------------- */

/* seq holds element codes a_0..a_n (len = n+1) */
int hankelff_rank(const hankelff_field* f, const uint32_t* seq, size_t len, uint32_t l,
                  uint32_t m, uint32_t* rank_out);

/* profile and characteristic pair as one JSON document */
int hankelff_profile_json(const hankelff_field* f, const uint32_t* seq, size_t len,
                          char** json_out);

/* kernel basis at shape (l, m) as a JSON list of polynomials */
int hankelff_kernel_json(const hankelff_field* f, const uint32_t* seq, size_t len, uint32_t l,
                         uint32_t m, char** json_out);

/* Euclidean-correspondence report for one sequence */
int hankelff_euclid_json(const hankelff_field* f, const uint32_t* seq, size_t len,
                         char** json_out);

/* ---- verification harness ----------------------------------------------- */

/*
 * config_json mirrors the CLI flags, e.g.
 *   {"command":"variance","p":2,"n":"4..6","h":"0..4","format":"json"}
 * The rendered report document is returned through report_out and the
 * harness exit status (0 clean, 1 mismatch, 2 budget exceeded) through
 * exit_status_out.
 */
int hankelff_run_json(const char* config_json, char** report_out, int* exit_status_out);

#ifdef __cplusplus
}
#endif

#endif /* HANKELFF_H */
