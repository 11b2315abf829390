#include "ccert/rewrite.hpp"

#include "ccert/error.hpp"

namespace ccert {

namespace {

using CW = CommutatorWitness;

Certificate finish(Certificate c, TermPolicy policy) {
  return policy == TermPolicy::kDropZero ? normalized(std::move(c)) : c;
}

void require_commutator(const CW& w, const char* name) {
  if (!w.recomputes()) {
    throw Error(ErrorCode::kNotACommutator,
                std::string("witness for ") + name + " does not recompute");
  }
}

}  // namespace

RingElement ScaledBracket::value() const {
  RingElement v = bracket.value;
  if (left) v = *left * v;
  if (right) v = v * *right;
  return v;
}

std::array<ScaledBracket, 3> lemma31_expand(const RingElement& a, const RingElement& x,
                                            const RingElement& y, const RingElement& b) {
  return {ScaledBracket{a, CW::of(commutator(b, y), x), std::nullopt},
          ScaledBracket{a, CW::of(commutator(x, b), y), std::nullopt},
          ScaledBracket{a * b, CW::of(x, y), std::nullopt}};
}

std::pair<SingleCommutator, ScaledBracket> lemma32_split(const RingElement& a,
                                                         const RingElement& x,
                                                         const RingElement& y) {
  return {SingleCommutator{CW::of(a * x, y)}, ScaledBracket{std::nullopt, CW::of(y, a), x}};
}

std::array<PairProduct, 3> lemma33_core(const RingElement& c, const CW& p, const CW& q1,
                                        const CW& q2) {
  require_commutator(p, "p");
  require_commutator(q1, "q1");
  require_commutator(q2, "q2");
  const RingElement cp = c * p.value;
  return {PairProduct{CW::of(cp, q1.value), q2},
          PairProduct{q1, CW::of(cp, q2.value)},
          PairProduct{CW::of(q1.value * q2.value, c), p}};
}

Certificate xi3_decompose(const RingElement& a, const SingleUnitWitness& w, TermPolicy policy) {
  if (!w.s.same_ring(a) || !holds(w)) {
    throw Error(ErrorCode::kInvalidWitness, "1 = s[u, vw] does not hold in " + a.ring_name());
  }
  const auto terms = lemma33_core(a * w.s, w.u, w.v, w.w);
  Certificate c{a, {terms.begin(), terms.end()}, "rewrite.xi3"};
  return finish(std::move(c), policy);
}

Certificate mixed_decompose(const RingElement& a, const SingleUnitWitness& w, TermPolicy policy) {
  if (!w.s.same_ring(a) || !w.u.recomputes() || !w.v.recomputes() ||
      !(w.s * commutator(w.u.value, w.v.value) == a.one_like())) {
    throw Error(ErrorCode::kInvalidWitness, "1 = s[u, v] does not hold in " + a.ring_name());
  }
  const RingElement as = a * w.s;
  Certificate c{a, {}, "rewrite.mixed"};
  c.terms.emplace_back(SingleCommutator{CW::of(as * w.u.value, w.v.value)});
  c.terms.emplace_back(PairProduct{CW::of(w.v.value, as), w.u});
  return finish(std::move(c), policy);
}

Certificate pipeline_12d(const RingElement& a, const SumUnitWitness& w, TermPolicy policy) {
  if (w.summands.empty() || !w.summands.front().a.same_ring(a) || !holds(w)) {
    throw Error(ErrorCode::kInvalidWitness,
                "1 = sum a_j [x_j, y_j z_j] b_j does not hold in " + a.ring_name());
  }
  Certificate c{a, {}, "rewrite.pipeline_12d"};
  auto emit = [&](const RingElement& coeff, const CW& p, const CW& q1, const CW& q2) {
    for (auto& t : lemma33_core(coeff, p, q1, q2)) c.terms.emplace_back(std::move(t));
  };
  for (const auto& s : w.summands) {
    // a a_j [X, YZ] B, expanded as A[[B,YZ],X] + A[[X,B],YZ] + AB[X,YZ]
    const RingElement big_a = a * s.a;
    const RingElement& big_b = s.b;
    // A[[B,YZ],X] = (-A)[X, [B,Y] Z] + (-A)[X, Y [B,Z]]
    emit(-big_a, s.x, CW::of(big_b, s.y.value), s.z);
    emit(-big_a, s.x, s.y, CW::of(big_b, s.z.value));
    emit(big_a, CW::of(s.x.value, big_b), s.y, s.z);
    emit(big_a * big_b, s.x, s.y, s.z);
  }
  return finish(std::move(c), policy);
}

}  // namespace ccert
