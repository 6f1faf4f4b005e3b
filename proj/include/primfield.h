/*
 * primfield: subspace structure of finite field extensions GF(q) < GF(q^n).
 *
 * The library hands out opaque tower handles and JSON reports. Reports are
 * deterministic: the same command with the same arguments produces
 * byte-identical text. Strings returned through char** are heap-allocated;
 * release them with pf_string_free.
 */
#ifndef PRIMFIELD_H
#define PRIMFIELD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pf_status {
  PF_OK = 0,
  PF_ERR_NOT_PRIME = 1,
  PF_ERR_SIZE_LIMIT = 2,
  PF_ERR_INVALID_POLYNOMIAL = 3,
  PF_ERR_NOT_A_DIVISOR = 4,
  PF_ERR_FIELD_MISMATCH = 5,
  PF_ERR_DIMENSION_MISMATCH = 6,
  PF_ERR_NO_AVOIDING_VECTOR = 7,
  PF_ERR_EMPTY_FAMILY = 8,
  PF_ERR_TRIVIAL_EXTENSION = 9,
  PF_ERR_NO_COVERING_EXISTS = 10,
  PF_ERR_TI_TOO_LARGE = 11,
  PF_ERR_NOT_A_PARTITION = 12,
  PF_ERR_NOT_PRIMITIVE = 13,
  PF_ERR_MAP_NOT_INJECTIVE = 14,
  PF_ERR_PARSE = 15,
  PF_ERR_BAD_ARGUMENT = 16,
  PF_ERR_IO = 17,
  PF_ERR_NULL_POINTER = 18,
  PF_ERR_INTERNAL = 19,
  PF_ERR_OUT_OF_MEMORY = 20
} pf_status;

/* GF(p) < GF(q) = GF(p)[y]/(h) < GF(q^n) = GF(q)[x]/(g), built from a seed */
typedef struct pf_tower pf_tower;

#define PF_DEFAULT_ENUM_LIMIT ((uint64_t)1 << 20)

const char* pf_version(void);
const char* pf_status_name(pf_status status);
/* message of the most recent failure on the calling thread, "" if none */
const char* pf_last_error(void);
void pf_string_free(char* s);

pf_status pf_tower_create(uint64_t p, uint32_t r, uint32_t n, uint64_t seed,
                          uint64_t enum_limit, pf_tower** out);
/* record with keys p, r, n, seed, h, g; rebuilds the tower bit-exactly */
pf_status pf_tower_from_json(const char* json, uint64_t enum_limit, pf_tower** out);
pf_status pf_tower_to_json(const pf_tower* tower, char** out_json);
void pf_tower_free(pf_tower* tower);

uint64_t pf_tower_p(const pf_tower* tower);
uint32_t pf_tower_r(const pf_tower* tower);
uint32_t pf_tower_n(const pf_tower* tower);
uint64_t pf_tower_q(const pf_tower* tower);
uint64_t pf_tower_seed(const pf_tower* tower);

/*
 * Elements of GF(q^n) are arrays of n coordinate codes over GF(q), least
 * degree first. A code in [0, q) encodes GF(p)-digits base p.
 */
pf_status pf_add(const pf_tower* tower, const uint64_t* a, const uint64_t* b, uint64_t* out);
pf_status pf_sub(const pf_tower* tower, const uint64_t* a, const uint64_t* b, uint64_t* out);
pf_status pf_mul(const pf_tower* tower, const uint64_t* a, const uint64_t* b, uint64_t* out);
pf_status pf_inv(const pf_tower* tower, const uint64_t* a, uint64_t* out);
pf_status pf_frobenius(const pf_tower* tower, const uint64_t* a, uint64_t* out);
/* least d dividing n with a^(q^d) = a */
pf_status pf_element_degree(const pf_tower* tower, const uint64_t* a, uint32_t* out);

/* basis of the intermediate field GF(q^d) as rows over GF(q); d must divide n */
pf_status pf_subfield_basis_json(const pf_tower* tower, uint32_t d, char** out_json);

/* command reports */
pf_status pf_analyze_json(uint64_t p, uint32_t r, uint32_t n, uint64_t seed,
                          uint64_t enum_limit, char** out_json);
pf_status pf_construct_json(uint64_t p, uint32_t r, uint32_t n, uint64_t seed,
                            uint64_t enum_limit, char** out_json);
pf_status pf_oracle_json(uint64_t p, uint32_t r, uint32_t n, uint64_t seed,
                         uint64_t enum_limit, char** out_json);
pf_status pf_covering_json(uint64_t q, uint32_t n, uint64_t enum_limit, char** out_json);
pf_status pf_partition_json(uint64_t p, uint32_t r, uint32_t n, uint64_t seed,
                            uint64_t enum_limit, const uint32_t* piece_dims,
                            size_t piece_count, char** out_json);
/* file_text uses the block format: ambient dimension, blank line, then one
 * block of rational rows per family member */
pf_status pf_avoid_json(const char* file_text, char** out_json);
pf_status pf_boundary_search_json(uint64_t q, uint32_t n_min, uint32_t n_max, uint64_t seed,
                                  uint64_t enum_limit, char** out_json);

/* exit advice carried by a finished report: 0 confirmed, 2 undetermined */
int pf_report_exit_code(const char* json);

#ifdef __cplusplus
}
#endif

#endif /* PRIMFIELD_H */
