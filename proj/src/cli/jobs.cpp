#include "ccert/jobs.hpp"

#include <fstream>
#include <sstream>

#include "ccert/error.hpp"
#include "ccert/explore.hpp"
#include "ccert/freealg.hpp"
#include "ccert/json_io.hpp"
#include "ccert/mdecomp.hpp"
#include "ccert/random.hpp"
#include "ccert/rewrite.hpp"
#include "ccert/witness.hpp"
#include "ccert/z23.hpp"

namespace ccert {

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

RingElement read_element(const WorkingRing& ring, const std::string& text) {
  RingElement e = element_from_json(parse_json(text));
  if (e.ring_name() != ring.name()) {
    throw Error(ErrorCode::kRingMismatch,
                "element lives in " + e.ring_name() + ", expected " + ring.name());
  }
  return e;
}

Certificate decompose_element(const RingElement& e) {
  if (e.is_z23()) return z23_xi6(e.z23());
  if (e.is_direct_sum()) return decompose_direct_sum(e.direct_sum());
  const Matrix& m = e.matrix();
  if (m.ring() == Ring::quaternions()) {
    if (m.size() != 1) {
      throw Error(ErrorCode::kShapeMismatch, "quaternion inputs are 1x1 matrices over H");
    }
    return quaternion_decompose(m(0, 0));
  }
  return decompose_nxn(m);
}

RingElement random_element(RandomElements& source, const WorkingRing& ring) {
  switch (ring.kind) {
    case WorkingRing::Kind::kZ23:
      return z23_random_admissible(source.engine()());
    case WorkingRing::Kind::kDirectSum: {
      std::vector<Matrix> parts;
      for (std::size_t i = 0; i < ring.sizes.size(); ++i) {
        parts.push_back(source.matrix(ring.coefficients[i], ring.sizes[i]));
      }
      return DirectSum(std::move(parts));
    }
    case WorkingRing::Kind::kMatrix:
      break;
  }
  return source.matrix(ring.coefficients.front(), ring.sizes.front());
}

SingleUnitWitness builtin_witness(const WorkingRing& ring) {
  if (ring.kind == WorkingRing::Kind::kZ23) {
    throw Error(ErrorCode::kInvalidWitness, "Z23 has no single-summand witness; use z23 xi6");
  }
  for (RingRef r : ring.coefficients) {
    if (r != ring.coefficients.front()) {
      throw Error(ErrorCode::kInvalidWitness, "built-in witnesses need one coefficient ring");
    }
  }
  if (ring.kind == WorkingRing::Kind::kDirectSum) return subring_witness(ring.sizes, ring.coefficients.front());
  return matrix_unit_witness(ring.sizes.front(), ring.coefficients.front());
}

Json verify_json(const Certificate& c, const VerifyResult& v) {
  Json out{{"valid", v.valid}};
  if (!v.valid) out["reason"] = v.reason;
  out["pairCount"] = pair_count(c);
  out["singleCount"] = single_count(c);
  out["provenance"] = c.provenance;
  return out;
}

FiniteRing load_finite_ring(const std::string& spec) {
  const std::string prefix = "tables:";
  if (spec.rfind(prefix, 0) != 0) return FiniteRing::generate(spec);
  const std::string path = spec.substr(prefix.size());
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kMalformedInput, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const Json j = parse_json(buffer.str());
  auto table = [&](const char* key) {
    std::vector<FiniteRing::Index> out;
    if (!j.contains(key) || !j.at(key).is_array()) {
      throw Error(ErrorCode::kMalformedInput, std::string("tables need '") + key + "'");
    }
    for (const Json& row : j.at(key)) {
      if (!row.is_array()) throw Error(ErrorCode::kMalformedInput, "table rows must be arrays");
      for (const Json& v : row) {
        if (!v.is_number_unsigned() || v.get<std::size_t>() >= FiniteRing::kMaxSize) {
          throw Error(ErrorCode::kMalformedInput, "table entries must be element indices");
        }
        out.push_back(static_cast<FiniteRing::Index>(v.get<std::size_t>()));
      }
    }
    return out;
  };
  auto add = table("add");
  auto mul = table("mul");
  std::size_t size = 0;
  while (size * size < add.size()) ++size;
  auto index = [&](const char* key) -> std::optional<FiniteRing::Index> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    if (!j.at(key).is_number_unsigned()) throw Error(ErrorCode::kMalformedInput, "bad element index");
    return static_cast<FiniteRing::Index>(j.at(key).get<std::size_t>());
  };
  const std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : spec;
  return FiniteRing::from_tables(name, size, std::move(add), std::move(mul), index("zero").value_or(0),
                                 index("one"));
}

Json xi_json(const XiResult& xi) {
  switch (xi.status) {
    case XiResult::Status::kValue:
      return xi.value;
    case XiResult::Status::kNotGenerated:
      return "NotGenerated";
    case XiResult::Status::kCapReached:
      return "CapReached";
  }
  return nullptr;
}

}  // namespace

JobResult job_decompose(const std::string& ring_spec, const std::string& element_json, bool check) {
  const WorkingRing ring = parse_working_ring(ring_spec);
  const Certificate c = decompose_element(read_element(ring, element_json));
  JobResult out;
  if (check) {
    const VerifyResult v = verify(c);
    out.passed = v.valid;
    if (!v.valid) {
      out.json = dump(verify_json(c, v));
      return out;
    }
  }
  out.json = dump(certificate_to_json(c));
  return out;
}

JobResult job_decompose_random(const std::string& ring_spec, unsigned count, std::uint64_t seed,
                               bool check) {
  const WorkingRing ring = parse_working_ring(ring_spec);
  RandomElements source(seed);
  std::size_t valid = 0, max_pairs = 0, max_singles = 0;
  for (unsigned i = 0; i < count; ++i) {
    const Certificate c = decompose_element(random_element(source, ring));
    if (!check || verify(c).valid) ++valid;
    max_pairs = std::max(max_pairs, pair_count(c));
    max_singles = std::max(max_singles, single_count(c));
  }
  Json j{{"ring", ring.name()}, {"seed", seed},         {"count", count},
         {"checked", check},    {"valid", valid},       {"maxPairCount", max_pairs},
         {"maxSingleCount", max_singles}};
  return {valid == count, dump(j)};
}

JobResult job_verify(const std::string& certificate_json) {
  const Certificate c = certificate_from_json(parse_json(certificate_json));
  const VerifyResult v = verify(c);
  return {v.valid, dump(verify_json(c, v))};
}

JobResult job_witness(unsigned n) {
  const WitnessTriple t = witness_triple(n);
  const WitnessTripleCheck check = check_witness_triple(t);
  Json j{{"n", n},
         {"u", witness_to_json(t.u)},
         {"v", witness_to_json(t.v)},
         {"w", witness_to_json(t.w)},
         {"bracketUV", matrix_to_json(t.bracket_uv)},
         {"s", matrix_to_json(t.s)},
         {"checks",
          {{"bracketsRecompute", check.brackets_recompute},
           {"detIsUnit", check.det_is_unit},
           {"vAbsorbsW", check.v_absorbs_w},
           {"unitIdentity", check.unit_identity}}},
         {"valid", check.all()}};
  return {check.all(), dump(j)};
}

JobResult job_xi3(const std::string& ring_spec, const std::string& element_json,
                  const std::string& witness_json, const std::string& method) {
  const WorkingRing ring = parse_working_ring(ring_spec);
  const RingElement a = read_element(ring, element_json);
  const SingleUnitWitness w =
      witness_json.empty() ? builtin_witness(ring) : unit_witness_from_json(parse_json(witness_json));
  Certificate c{a, {}, ""};
  if (method == "xi3") {
    c = xi3_decompose(a, w);
  } else if (method == "mixed") {
    // s[u, v] = s[u, vw] = 1 because vw = v
    c = mixed_decompose(a, w);
  } else if (method == "pipeline") {
    c = pipeline_12d(a, as_sum(w));
  } else {
    throw Error(ErrorCode::kInvalidArgument, "method must be xi3, mixed or pipeline");
  }
  const VerifyResult v = verify(c);
  if (!v.valid) return {false, dump(verify_json(c, v))};
  return {true, dump(certificate_to_json(c))};
}

JobResult job_bound(const std::string& structure) {
  const auto rules = xi_upper_bound(structure);
  Json list = Json::array();
  unsigned long long best = rules.front().bound;
  for (const BoundRule& r : rules) {
    best = std::min(best, r.bound);
    Json item{{"bound", r.bound}, {"rule", r.rule}, {"constructive", r.constructive}};
    if (!r.algorithm.empty()) item["algorithm"] = r.algorithm;
    list.push_back(std::move(item));
  }
  return {true, dump(Json{{"structure", structure}, {"best", best}, {"rules", list}})};
}

JobResult job_brute(const std::string& ring_spec, unsigned xi_cap) {
  if (xi_cap == 0) throw Error(ErrorCode::kInvalidArgument, "xi cap must be positive");
  const FiniteRing ring = load_finite_ring(ring_spec);
  const XiResult xi = xi_exact(ring, xi_cap);
  const Section2Report s2 = check_section2(ring);
  const RadicalPowerReport radical = radical_power_check(ring);
  Json histogram = Json::object();
  for (const auto& [m, count] : radical.exponent_histogram) histogram[std::to_string(m)] = count;
  Json j{{"ring", ring.name()},
         {"size", ring.size()},
         {"unital", ring.one().has_value()},
         {"xi", xi_json(xi)},
         {"commutators", xi.commutator_count},
         {"pairProducts", xi.pair_product_count},
         {"sumsetSizes", xi.sumset_sizes},
         {"section2",
          {{"commutative", s2.commutative},
           {"commutatorsCentral", s2.commutators_central},
           {"commutesWithSquares", s2.commutes_with_squares},
           {"commutatorsCommute", s2.commutators_commute},
           {"semiprime", s2.semiprime},
           {"commutatorIdealSize", s2.commutator_ideal_size},
           {"commutatorIdealNil", s2.commutator_ideal_nil},
           {"equivalenceHolds", s2.equivalence_holds},
           {"nilImplicationHolds", s2.nil_implication_holds}}},
         {"radicalPower",
          {{"idealSize", radical.ideal_size},
           {"closureSize", radical.closure_size},
           {"maxExponent", radical.max_exponent},
           {"histogram", histogram}}}};
  return {s2.ok(), dump(j)};
}

JobResult job_example22(unsigned field_size) {
  const Example22Report r = example22_check(field_size);
  Json j{{"fieldSize", r.field_size},
         {"lieIdeal", r.lie_ideal},
         {"abelian", r.abelian},
         {"notCentral", r.not_central},
         {"scalarControlCentral", r.scalar_control_central},
         {"passed", r.ok()}};
  return {r.ok(), dump(j)};
}

JobResult job_z23_verify_unit(unsigned grid_points) {
  constexpr double kTolerance = 1e-12;
  const Z23UnitReport r = z23_verify_unit(static_cast<int>(grid_points));
  Json j{{"firstHalf", r.first_half},
         {"secondHalf", r.second_half},
         {"sumIsOne", r.sum_is_one},
         {"witnessesRecompute", r.witnesses_recompute},
         {"allAdmissible", r.all_admissible},
         {"gridPoints", r.grid_points},
         {"maxResidual", r.max_residual},
         {"tolerance", kTolerance},
         {"passed", r.ok(kTolerance)}};
  return {r.ok(kTolerance), dump(j)};
}

JobResult job_z23_xi6(const std::string& element_json) {
  const RingElement e = element_from_json(parse_json(element_json));
  if (!e.is_z23()) throw Error(ErrorCode::kRingMismatch, "expected a Z23 element");
  const Certificate c = z23_xi6(e.z23());
  const VerifyResult v = verify(c);
  if (!v.valid) return {false, dump(verify_json(c, v))};
  return {true, dump(certificate_to_json(c))};
}

JobResult job_identities() {
  Json list = Json::array();
  bool all = true;
  for (const IdentityResult& r : identity_suite()) {
    all = all && r.passed;
    Json item{{"name", r.name}, {"passed", r.passed}, {"lhsTerms", r.lhs_terms}, {"rhsTerms", r.rhs_terms}};
    if (!r.note.empty()) item["note"] = r.note;
    list.push_back(std::move(item));
  }
  return {all, dump(Json{{"identities", list}, {"allPassed", all}})};
}

}  // namespace ccert
