#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccert/certificate.hpp"
#include "ccert/unit_witness.hpp"

namespace ccert {

using Json = nlohmann::ordered_json;

/// Ring descriptor, e.g. {"kind":"Zmod","m":"6"}.
Json ring_to_json(RingRef ring);
RingRef ring_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Matrices as matrix objects, direct sums as {"kind":"sum","parts":[...]},
/// Z23 elements as {"kind":"z23","monomials":[...]}.
Json element_to_json(const RingElement& e);
RingElement element_from_json(const Json& j);

/// Descriptor of the working ring an element lives in.
Json working_ring_to_json(const RingElement& e);

/// {"p": element, "q": element}; the value is recomputed on input.
Json witness_to_json(const CommutatorWitness& w);
CommutatorWitness witness_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);
/// Throws kMalformedInput on schema violations.
Certificate certificate_from_json(const Json& j);

/// {"s": element, "u": witness, "v": witness, "w": witness}
Json unit_witness_to_json(const SingleUnitWitness& w);
SingleUnitWitness unit_witness_from_json(const Json& j);

/// Parses JSON text, mapping syntax errors to kMalformedInput.
Json parse_json(const std::string& text);

/// Working ring named by a CLI spec:
///   M<n>(S) with S one of Z, Q, Z<m>, F<p>, S[x], H
///   A+B+...  direct sum of such matrix rings
///   H | Quat  rational quaternions (as 1x1 matrices)
///   Z23       the dimension-drop algebra
struct WorkingRing {
  enum class Kind { kMatrix, kDirectSum, kZ23 };
  Kind kind = Kind::kMatrix;
  std::vector<RingRef> coefficients;  // one per summand
  std::vector<std::size_t> sizes;

  /// Canonical name, matching RingElement::ring_name().
  std::string name() const;
};

/// Throws kUnknownRingSpec.
WorkingRing parse_working_ring(const std::string& spec);
/// Coefficient ring by name: Z, Q, Z<m>, F<p>, S[x], H.
RingRef parse_coefficient_ring(const std::string& spec);

}  // namespace ccert
