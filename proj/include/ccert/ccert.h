#ifndef CCERT_CCERT_H
#define CCERT_CCERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CCERT_API __declspec(dllexport)
#else
#define CCERT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. CCERT_CHECK_FAILED means the job ran but a requested check
   (verification, identity, invariant) did not pass. */
typedef enum ccert_status {
  CCERT_OK = 0,
  CCERT_CHECK_FAILED = 1,
  CCERT_RING_MISMATCH = 10,
  CCERT_SHAPE_MISMATCH = 11,
  CCERT_NONCOMMUTATIVE_COEFFICIENTS = 12,
  CCERT_NOT_INVERTIBLE = 13,
  CCERT_SIZE_TOO_SMALL = 14,
  CCERT_EMPTY_SUM = 15,
  CCERT_INVALID_WITNESS = 16,
  CCERT_NOT_A_COMMUTATOR = 17,
  CCERT_UNKNOWN_STRUCTURE = 18,
  CCERT_INADMISSIBLE_INPUT = 19,
  CCERT_OUT_OF_DOMAIN = 20,
  CCERT_MALFORMED_INPUT = 21,
  CCERT_UNKNOWN_RING_SPEC = 22,
  CCERT_INVALID_ARGUMENT = 23,
  CCERT_IDENTITY_FAILED = 24,
  CCERT_COUNTEREXAMPLE_FOUND = 25,
  CCERT_INTERNAL_ERROR = 99
} ccert_status;

/* Output of a job: JSON text on success or check failure, an error message
   otherwise. Owned by the caller; release with ccert_result_free. */
typedef struct ccert_result ccert_result;

/* A parsed certificate. Release with ccert_certificate_free. */
typedef struct ccert_certificate ccert_certificate;

CCERT_API const char* ccert_version(void);
/* Machine-readable name, e.g. "MalformedInput". */
CCERT_API const char* ccert_status_name(ccert_status status);

CCERT_API ccert_status ccert_result_status(const ccert_result* result);
/* JSON output; empty when the job failed with an error. */
CCERT_API const char* ccert_result_json(const ccert_result* result);
/* Error message; empty on success. */
CCERT_API const char* ccert_result_message(const ccert_result* result);
CCERT_API void ccert_result_free(ccert_result* result);

/* Every job stores a result in *out (also on error) and returns its status. */
CCERT_API ccert_status ccert_decompose(const char* ring_spec, const char* element_json, int check,
                                       ccert_result** out);
CCERT_API ccert_status ccert_decompose_random(const char* ring_spec, unsigned count, uint64_t seed,
                                              int check, ccert_result** out);
CCERT_API ccert_status ccert_verify(const char* certificate_json, ccert_result** out);
CCERT_API ccert_status ccert_witness(unsigned n, ccert_result** out);
/* witness_json may be NULL for the built-in witness; method is "xi3",
   "mixed" or "pipeline". */
CCERT_API ccert_status ccert_xi3(const char* ring_spec, const char* element_json,
                                 const char* witness_json, const char* method, ccert_result** out);
CCERT_API ccert_status ccert_bound(const char* structure, ccert_result** out);
CCERT_API ccert_status ccert_brute(const char* ring_spec, unsigned xi_cap, ccert_result** out);
CCERT_API ccert_status ccert_example22(unsigned field_size, ccert_result** out);
CCERT_API ccert_status ccert_z23_verify_unit(unsigned grid_points, ccert_result** out);
CCERT_API ccert_status ccert_z23_xi6(const char* element_json, ccert_result** out);
CCERT_API ccert_status ccert_identities(ccert_result** out);

/* Certificate handles. */
CCERT_API ccert_status ccert_certificate_parse(const char* json, ccert_certificate** out,
                                               ccert_result** error);
CCERT_API size_t ccert_certificate_term_count(const ccert_certificate* certificate);
CCERT_API size_t ccert_certificate_pair_count(const ccert_certificate* certificate);
/* CCERT_OK when valid, CCERT_CHECK_FAILED otherwise; the result holds the
   verification report. */
CCERT_API ccert_status ccert_certificate_verify(const ccert_certificate* certificate,
                                                ccert_result** out);
CCERT_API void ccert_certificate_free(ccert_certificate* certificate);

#ifdef __cplusplus
}
#endif

#endif
