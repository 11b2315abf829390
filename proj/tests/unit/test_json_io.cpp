#include "ccert/jobs.hpp"
#include "ccert/json_io.hpp"
#include "ccert/mdecomp.hpp"
#include "ccert/random.hpp"
#include "ccert/witness.hpp"
#include "ccert/z23.hpp"
#include "helpers.hpp"

using namespace ccert;

TEST_CASE("ring descriptors round trip") {
  for (RingRef r : {Ring::integers(), Ring::rationals(), Ring::integers_mod(6), Ring::prime_field(7),
                    Ring::polynomial(Ring::rationals()), Ring::quaternions()}) {
    CHECK(ring_from_json(ring_to_json(r)) == r);
  }
  CHECK(test::error_of([] { ring_from_json(Json{{"kind", "nope"}}); }) == ErrorCode::kUnknownRingSpec);
}

TEST_CASE("elements round trip") {
  RandomElements source(9);
  for (RingRef r : {Ring::integers(), Ring::rationals(), Ring::integers_mod(6), Ring::prime_field(7),
                    Ring::polynomial(Ring::rationals()), Ring::quaternions()}) {
    RingElement m = source.matrix(r, 3);
    CHECK(element_from_json(element_to_json(m)) == m);
  }
  RingElement d = source.direct_sum(Ring::integers(), {2, 3});
  CHECK(element_from_json(element_to_json(d)) == d);
  RingElement z = z23_random_admissible(3);
  CHECK(element_from_json(element_to_json(z)) == z);
  CHECK(element_from_json(parse_json(element_to_json(z).dump())) == z);
}

TEST_CASE("certificates round trip") {
  RandomElements source(10);
  Certificate c = decompose_nxn(source.matrix(Ring::rationals(), 4));
  Certificate back = certificate_from_json(parse_json(certificate_to_json(c).dump()));
  CHECK(back.target == c.target);
  CHECK(back.terms.size() == c.terms.size());
  CHECK(verify(back).valid);
  SingleUnitWitness w = matrix_unit_witness(3, Ring::integers());
  SingleUnitWitness wb = unit_witness_from_json(unit_witness_to_json(w));
  CHECK(holds(wb));
}

TEST_CASE("malformed input") {
  CHECK(test::error_of([] { parse_json("{"); }) == ErrorCode::kMalformedInput);
  CHECK(test::error_of([] { certificate_from_json(Json{{"target", 1}}); }) == ErrorCode::kMalformedInput);
  CHECK(test::error_of([] { parse_working_ring("M2(R)"); }) == ErrorCode::kUnknownRingSpec);
  CHECK(parse_working_ring("M3(Z6)").name() == "M3(Z6)");
  CHECK(parse_working_ring("M2(Z)+M3(Z)").kind == WorkingRing::Kind::kDirectSum);
  CHECK(parse_working_ring("Z23").kind == WorkingRing::Kind::kZ23);
}

TEST_CASE("jobs") {
  JobResult w = job_witness(4);
  CHECK(w.passed);
  CHECK(parse_json(w.json).at("valid") == true);
  JobResult r = job_decompose_random("M3(F5)", 20, 1, true);
  CHECK(r.passed);
  CHECK(parse_json(r.json).at("maxPairCount").get<int>() <= 2);
  RandomElements source(12);
  const std::string elem = element_to_json(source.direct_sum(Ring::integers(), {2, 3})).dump();
  for (const char* method : {"xi3", "mixed", "pipeline"}) {
    CAPTURE(method);
    CHECK(job_xi3("M2(Z)+M3(Z)", elem, "", method).passed);
  }
  CHECK(test::error_of([&] { job_xi3("M2(Z)+M3(Z)", elem, "", "other"); }) == ErrorCode::kInvalidArgument);
  CHECK(test::error_of([&] { job_decompose("M3(Z)", elem, true); }) == ErrorCode::kRingMismatch);
  CHECK(parse_json(job_bound("Z23").json).at("best") == 6);
  CHECK(job_brute("U2(F2)", 4).passed);
  CHECK(job_example22(4).passed);
  CHECK(job_identities().passed);
}
