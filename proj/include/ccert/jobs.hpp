#pragma once

#include <cstdint>
#include <string>

namespace ccert {

/// JSON text plus whether every check requested by the job passed. Input
/// and computation errors are thrown as ccert::Error.
struct JobResult {
  bool passed = true;
  std::string json;
};

/// Certificate for an element read from JSON text; `check` verifies it first.
JobResult job_decompose(const std::string& ring_spec, const std::string& element_json, bool check);
/// Decomposes `count` seeded random elements; reports counts and the largest
/// pair count.
JobResult job_decompose_random(const std::string& ring_spec, unsigned count, std::uint64_t seed,
                               bool check);
JobResult job_verify(const std::string& certificate_json);
JobResult job_witness(unsigned n);
/// method: "xi3", "mixed" or "pipeline". An empty witness text selects the
/// built-in witness for the ring.
JobResult job_xi3(const std::string& ring_spec, const std::string& element_json,
                  const std::string& witness_json, const std::string& method);
JobResult job_bound(const std::string& structure);
/// ring_spec: finite-ring generator or tables:<file>.
JobResult job_brute(const std::string& ring_spec, unsigned xi_cap);
JobResult job_example22(unsigned field_size);
JobResult job_z23_verify_unit(unsigned grid_points);
JobResult job_z23_xi6(const std::string& element_json);
JobResult job_identities();

}  // namespace ccert
