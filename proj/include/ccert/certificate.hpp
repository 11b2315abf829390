#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "ccert/ring_element.hpp"

namespace ccert {

/// A pair (p, q) together with its commutator. The cached value is kept for
/// inspection only; verify() always recomputes it.
struct CommutatorWitness {
  RingElement p;
  RingElement q;
  RingElement value;

  static CommutatorWitness of(RingElement p, RingElement q);
  bool recomputes() const { return commutator(p, q) == value; }
};

/// left.value * right.value
struct PairProduct {
  CommutatorWitness left;
  CommutatorWitness right;
};

/// w.value
struct SingleCommutator {
  CommutatorWitness w;
};

using CertificateTerm = std::variant<PairProduct, SingleCommutator>;

/// Value of a term from the cached witness values.
RingElement term_value(const CertificateTerm& term);

/// Claims target = sum of term values.
struct Certificate {
  RingElement target;
  std::vector<CertificateTerm> terms;
  std::string provenance;
};

struct VerifyResult {
  bool valid = false;
  std::string reason;

  explicit operator bool() const noexcept { return valid; }
};

/// Recomputes every witness bracket from its pair and checks that the term
/// contributions sum exactly to the target. Ring mismatches are reported as
/// Invalid, never thrown.
VerifyResult verify(const Certificate& certificate);

std::size_t pair_count(const Certificate& certificate);
std::size_t single_count(const Certificate& certificate);

enum class TermPolicy {
  kDropZero,  // drop zero-valued terms (the zero target gives no terms)
  kKeepAll,
};

/// Removes terms whose cached value is zero.
Certificate normalized(Certificate certificate);

/// Applies a ring map to the target and to every p, q of every witness;
/// witness values are recomputed. Used for J-conjugation and embeddings.
Certificate map_certificate(const Certificate& certificate,
                            const std::function<RingElement(const RingElement&)>& map);

}  // namespace ccert
