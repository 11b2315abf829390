#include "ccert/certificate.hpp"

#include <algorithm>

#include "ccert/error.hpp"

namespace ccert {

CommutatorWitness CommutatorWitness::of(RingElement p, RingElement q) {
  RingElement value = commutator(p, q);
  return {std::move(p), std::move(q), std::move(value)};
}

RingElement term_value(const CertificateTerm& term) {
  if (const auto* pair = std::get_if<PairProduct>(&term)) {
    return pair->left.value * pair->right.value;
  }
  return std::get<SingleCommutator>(term).w.value;
}

VerifyResult verify(const Certificate& certificate) {
  try {
    RingElement sum = certificate.target.zero_like();
    std::size_t index = 0;
    auto recompute = [&](const CommutatorWitness& w) -> RingElement {
      if (!w.p.same_ring(certificate.target) || !w.q.same_ring(certificate.target)) {
        throw Error(ErrorCode::kRingMismatch, "term " + std::to_string(index) +
                                                  " lives in " + w.p.ring_name() + ", target in " +
                                                  certificate.target.ring_name());
      }
      RingElement value = commutator(w.p, w.q);
      if (!(value == w.value)) {
        throw Error(ErrorCode::kInvalidWitness,
                    "witness value mismatch in term " + std::to_string(index));
      }
      return value;
    };
    for (const auto& term : certificate.terms) {
      if (const auto* pair = std::get_if<PairProduct>(&term)) {
        sum = sum + recompute(pair->left) * recompute(pair->right);
      } else {
        sum = sum + recompute(std::get<SingleCommutator>(term).w);
      }
      ++index;
    }
    if (!(sum == certificate.target)) return {false, "sum mismatch"};
    return {true, ""};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kRingMismatch || e.code() == ErrorCode::kShapeMismatch) {
      return {false, std::string("ring mismatch: ") + e.what()};
    }
    return {false, e.what()};
  }
}

std::size_t pair_count(const Certificate& certificate) {
  return static_cast<std::size_t>(
      std::count_if(certificate.terms.begin(), certificate.terms.end(),
                    [](const CertificateTerm& t) { return std::holds_alternative<PairProduct>(t); }));
}

std::size_t single_count(const Certificate& certificate) {
  return certificate.terms.size() - pair_count(certificate);
}

Certificate normalized(Certificate certificate) {
  std::erase_if(certificate.terms,
                [](const CertificateTerm& t) { return term_value(t).is_zero(); });
  return certificate;
}

Certificate map_certificate(const Certificate& certificate,
                            const std::function<RingElement(const RingElement&)>& map) {
  auto map_witness = [&](const CommutatorWitness& w) {
    return CommutatorWitness::of(map(w.p), map(w.q));
  };
  Certificate out{map(certificate.target), {}, certificate.provenance};
  out.terms.reserve(certificate.terms.size());
  for (const auto& term : certificate.terms) {
    if (const auto* pair = std::get_if<PairProduct>(&term)) {
      out.terms.emplace_back(PairProduct{map_witness(pair->left), map_witness(pair->right)});
    } else {
      out.terms.emplace_back(SingleCommutator{map_witness(std::get<SingleCommutator>(term).w)});
    }
  }
  return out;
}

}  // namespace ccert
