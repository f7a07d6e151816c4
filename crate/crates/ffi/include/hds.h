#ifndef HDS_H
#define HDS_H

#include <stdint.h>

/*
 Result code of every fallible entry point.
 */
typedef enum HdsStatus {
  HDS_STATUS_OK = 0,
  HDS_STATUS_NULL_POINTER = 1,
  HDS_STATUS_INVALID_ARGUMENT = 2,
  HDS_STATUS_DOMAIN_ERROR = 3,
  HDS_STATUS_VERIFY_FAILED = 4,
  HDS_STATUS_PANIC = 5,
} HdsStatus;

/*
 An opaque Hermitian symmetric pair.
 */
typedef struct HdsPair HdsPair;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Build SU(p,q). On success `*out` owns a handle for `hds_pair_free`.

 # Safety
 `out` must be NULL or valid for writes.
 */
enum HdsStatus hds_pair_new_su(uint32_t p, uint32_t q, struct HdsPair **out);

/*
 Build Sp(n,R).

 # Safety
 `out` must be NULL or valid for writes.
 */
enum HdsStatus hds_pair_new_sp(uint32_t n, struct HdsPair **out);

/*
 Release a handle. NULL is ignored.

 # Safety
 `pair` must be NULL or a handle from `hds_pair_new_*` not yet freed.
 */
void hds_pair_free(struct HdsPair *pair);

/*
 Structural data of the pair as JSON.

 # Safety
 `pair` must be a live handle; `out` must be valid for writes.
 */
enum HdsStatus hds_pair_to_json(const struct HdsPair *pair, char **out);

/*
 Blattner parameter of `lambda`, as the JSON object
 `{"lambda", "Lambda", "chamber_id", "condition_1_2"}`.

 # Safety
 `pair` must be a live handle, `lambda` a NUL-terminated string and `out`
 valid for writes.
 */
enum HdsStatus hds_blattner_param(const struct HdsPair *pair, const char *lambda, char **out);

/*
 Multiplicity of the K-type `mu` in the discrete series with parameter
 `lambda`, by the Blattner formula.

 # Safety
 Pointers as for `hds_blattner_param`; `out` valid for writes.
 */
enum HdsStatus hds_blattner_mult(const struct HdsPair *pair,
                                 const char *lambda,
                                 const char *mu,
                                 uint64_t *out);

/*
 Multiplicity of the K-type `mu` in the holomorphic discrete series with
 lowest K-type `big_lambda`.

 # Safety
 Pointers as for `hds_blattner_param`; `out` valid for writes.
 */
enum HdsStatus hds_holo_k_mult(const struct HdsPair *pair,
                               const char *big_lambda,
                               const char *mu,
                               uint64_t *out);

/*
 Admissibility verdict as JSON. `subgroup` is a preset name or a JSON
 subgroup description (anything starting with `{`).

 # Safety
 `pair` must be a live handle, `subgroup` NUL-terminated, `out` valid for
 writes.
 */
enum HdsStatus hds_admissible(const struct HdsPair *pair,
                              const char *subgroup,
                              uint32_t truncation,
                              char **out);

/*
 Run the golden checks; `item` may be NULL for all of them. The report is
 written to `*out` and the status is `HDS_STATUS_VERIFY_FAILED` if any item fails.

 # Safety
 `item` must be NULL or NUL-terminated; `out` valid for writes.
 */
enum HdsStatus hds_verify_paper(const char *item, char **out);

/*
 Message for the last failure on this thread; empty after a success. The
 pointer stays valid until the next call on the same thread.
 */
const char *hds_last_error(void);

/*
 Release a string returned by this library. NULL is ignored.

 # Safety
 `s` must be NULL or a string from this library not yet freed.
 */
void hds_string_free(char *s);

/*
 Schema version of the JSON documents.
 */
const char *hds_schema_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HDS_H */
