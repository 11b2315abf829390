#include "ccert/unit_witness.hpp"

#include "ccert/error.hpp"

namespace ccert {

bool holds(const SingleUnitWitness& w) {
  try {
    if (!w.u.recomputes() || !w.v.recomputes() || !w.w.recomputes()) return false;
    RingElement bracket = commutator(w.u.value, w.v.value * w.w.value);
    return w.s * bracket == w.s.one_like();
  } catch (const Error&) {
    return false;
  }
}

bool holds(const SumUnitWitness& w) {
  if (w.summands.empty()) return false;
  try {
    RingElement total = w.summands.front().a.zero_like();
    for (const auto& t : w.summands) {
      if (!t.x.recomputes() || !t.y.recomputes() || !t.z.recomputes()) return false;
      total = total + t.a * commutator(t.x.value, t.y.value * t.z.value) * t.b;
    }
    return total == total.one_like();
  } catch (const Error&) {
    return false;
  }
}

SumUnitWitness as_sum(const SingleUnitWitness& w) {
  return {{UnitWitnessSummand{w.s, w.u, w.v, w.w, w.s.one_like()}}};
}

}  // namespace ccert
