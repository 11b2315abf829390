#include "ccert/ccert.h"

#include <functional>
#include <new>
#include <string>

#include "ccert/error.hpp"
#include "ccert/jobs.hpp"
#include "ccert/json_io.hpp"

struct ccert_result {
  ccert_status status = CCERT_OK;
  std::string json;
  std::string message;
};

struct ccert_certificate {
  ccert::Certificate certificate;
};

namespace {

ccert_status from_error_code(ccert::ErrorCode code) {
  using ccert::ErrorCode;
  switch (code) {
    case ErrorCode::kRingMismatch: return CCERT_RING_MISMATCH;
    case ErrorCode::kShapeMismatch: return CCERT_SHAPE_MISMATCH;
    case ErrorCode::kNoncommutativeCoefficients: return CCERT_NONCOMMUTATIVE_COEFFICIENTS;
    case ErrorCode::kNotInvertible: return CCERT_NOT_INVERTIBLE;
    case ErrorCode::kSizeTooSmall: return CCERT_SIZE_TOO_SMALL;
    case ErrorCode::kEmptySum: return CCERT_EMPTY_SUM;
    case ErrorCode::kInvalidWitness: return CCERT_INVALID_WITNESS;
    case ErrorCode::kNotACommutator: return CCERT_NOT_A_COMMUTATOR;
    case ErrorCode::kUnknownStructure: return CCERT_UNKNOWN_STRUCTURE;
    case ErrorCode::kInadmissibleInput: return CCERT_INADMISSIBLE_INPUT;
    case ErrorCode::kOutOfDomain: return CCERT_OUT_OF_DOMAIN;
    case ErrorCode::kMalformedInput: return CCERT_MALFORMED_INPUT;
    case ErrorCode::kUnknownRingSpec: return CCERT_UNKNOWN_RING_SPEC;
    case ErrorCode::kInvalidArgument: return CCERT_INVALID_ARGUMENT;
    case ErrorCode::kIdentityFailed: return CCERT_IDENTITY_FAILED;
    case ErrorCode::kCounterexampleFound: return CCERT_COUNTEREXAMPLE_FOUND;
  }
  return CCERT_INTERNAL_ERROR;
}

/// Runs a job and converts every outcome into a result handle.
ccert_status run(ccert_result** out, const std::function<ccert::JobResult()>& job) {
  if (out == nullptr) return CCERT_INVALID_ARGUMENT;
  *out = nullptr;
  auto* result = new (std::nothrow) ccert_result();
  if (result == nullptr) return CCERT_INTERNAL_ERROR;
  try {
    ccert::JobResult r = job();
    result->status = r.passed ? CCERT_OK : CCERT_CHECK_FAILED;
    result->json = std::move(r.json);
  } catch (const ccert::Error& e) {
    result->status = from_error_code(e.code());
    result->message = e.what();
  } catch (const std::exception& e) {
    result->status = CCERT_INTERNAL_ERROR;
    result->message = e.what();
  }
  *out = result;
  return result->status;
}

std::string optional_text(const char* s) { return s == nullptr ? std::string() : std::string(s); }

std::string text(const char* s) {
  if (s == nullptr) throw ccert::Error(ccert::ErrorCode::kInvalidArgument, "null string argument");
  return s;
}

}  // namespace

extern "C" {

const char* ccert_version(void) { return "1.0.0"; }

const char* ccert_status_name(ccert_status status) {
  switch (status) {
    case CCERT_OK: return "Ok";
    case CCERT_CHECK_FAILED: return "CheckFailed";
    case CCERT_RING_MISMATCH: return "RingMismatch";
    case CCERT_SHAPE_MISMATCH: return "ShapeMismatch";
    case CCERT_NONCOMMUTATIVE_COEFFICIENTS: return "NoncommutativeCoefficients";
    case CCERT_NOT_INVERTIBLE: return "NotInvertible";
    case CCERT_SIZE_TOO_SMALL: return "SizeTooSmall";
    case CCERT_EMPTY_SUM: return "EmptySum";
    case CCERT_INVALID_WITNESS: return "InvalidWitness";
    case CCERT_NOT_A_COMMUTATOR: return "NotACommutator";
    case CCERT_UNKNOWN_STRUCTURE: return "UnknownStructure";
    case CCERT_INADMISSIBLE_INPUT: return "InadmissibleInput";
    case CCERT_OUT_OF_DOMAIN: return "OutOfDomain";
    case CCERT_MALFORMED_INPUT: return "MalformedInput";
    case CCERT_UNKNOWN_RING_SPEC: return "UnknownRingSpec";
    case CCERT_INVALID_ARGUMENT: return "InvalidArgument";
    case CCERT_IDENTITY_FAILED: return "IdentityFailed";
    case CCERT_COUNTEREXAMPLE_FOUND: return "CounterexampleFound";
    case CCERT_INTERNAL_ERROR: return "InternalError";
  }
  return "Unknown";
}

ccert_status ccert_result_status(const ccert_result* result) {
  return result ? result->status : CCERT_INVALID_ARGUMENT;
}
const char* ccert_result_json(const ccert_result* result) { return result ? result->json.c_str() : ""; }
const char* ccert_result_message(const ccert_result* result) {
  return result ? result->message.c_str() : "";
}
void ccert_result_free(ccert_result* result) { delete result; }

ccert_status ccert_decompose(const char* ring_spec, const char* element_json, int check,
                             ccert_result** out) {
  return run(out, [&] { return ccert::job_decompose(text(ring_spec), text(element_json), check != 0); });
}

ccert_status ccert_decompose_random(const char* ring_spec, unsigned count, uint64_t seed, int check,
                                    ccert_result** out) {
  return run(out, [&] { return ccert::job_decompose_random(text(ring_spec), count, seed, check != 0); });
}

ccert_status ccert_verify(const char* certificate_json, ccert_result** out) {
  return run(out, [&] { return ccert::job_verify(text(certificate_json)); });
}

ccert_status ccert_witness(unsigned n, ccert_result** out) {
  return run(out, [&] { return ccert::job_witness(n); });
}

ccert_status ccert_xi3(const char* ring_spec, const char* element_json, const char* witness_json,
                       const char* method, ccert_result** out) {
  return run(out, [&] {
    return ccert::job_xi3(text(ring_spec), text(element_json), optional_text(witness_json),
                          method ? std::string(method) : std::string("xi3"));
  });
}

ccert_status ccert_bound(const char* structure, ccert_result** out) {
  return run(out, [&] { return ccert::job_bound(text(structure)); });
}

ccert_status ccert_brute(const char* ring_spec, unsigned xi_cap, ccert_result** out) {
  return run(out, [&] { return ccert::job_brute(text(ring_spec), xi_cap); });
}

ccert_status ccert_example22(unsigned field_size, ccert_result** out) {
  return run(out, [&] { return ccert::job_example22(field_size); });
}

ccert_status ccert_z23_verify_unit(unsigned grid_points, ccert_result** out) {
  return run(out, [&] { return ccert::job_z23_verify_unit(grid_points); });
}

ccert_status ccert_z23_xi6(const char* element_json, ccert_result** out) {
  return run(out, [&] { return ccert::job_z23_xi6(text(element_json)); });
}

ccert_status ccert_identities(ccert_result** out) {
  return run(out, [] { return ccert::job_identities(); });
}

ccert_status ccert_certificate_parse(const char* json, ccert_certificate** out, ccert_result** error) {
  if (out == nullptr) return CCERT_INVALID_ARGUMENT;
  *out = nullptr;
  ccert_certificate* parsed = nullptr;
  ccert_result* report = nullptr;
  const ccert_status status = run(&report, [&] {
    parsed = new ccert_certificate{ccert::certificate_from_json(ccert::parse_json(text(json)))};
    return ccert::JobResult{};
  });
  *out = parsed;
  if (error) {
    *error = report;
  } else {
    ccert_result_free(report);
  }
  return status;
}

size_t ccert_certificate_term_count(const ccert_certificate* certificate) {
  return certificate ? certificate->certificate.terms.size() : 0;
}

size_t ccert_certificate_pair_count(const ccert_certificate* certificate) {
  return certificate ? ccert::pair_count(certificate->certificate) : 0;
}

ccert_status ccert_certificate_verify(const ccert_certificate* certificate, ccert_result** out) {
  if (certificate == nullptr) return CCERT_INVALID_ARGUMENT;
  return run(out, [&] {
    const ccert::VerifyResult v = ccert::verify(certificate->certificate);
    ccert::Json j{{"valid", v.valid}};
    if (!v.valid) j["reason"] = v.reason;
    j["pairCount"] = ccert::pair_count(certificate->certificate);
    j["singleCount"] = ccert::single_count(certificate->certificate);
    j["provenance"] = certificate->certificate.provenance;
    return ccert::JobResult{v.valid, j.dump(2) + "\n"};
  });
}

void ccert_certificate_free(ccert_certificate* certificate) { delete certificate; }

}  // extern "C"
