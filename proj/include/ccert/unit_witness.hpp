#pragma once

#include <vector>

#include "ccert/certificate.hpp"

namespace ccert {

/// 1 = s [u, v w] with u, v, w commutators.
struct SingleUnitWitness {
  RingElement s;
  CommutatorWitness u;
  CommutatorWitness v;
  CommutatorWitness w;
};

/// One summand a [x, y z] b of a unit decomposition.
struct UnitWitnessSummand {
  RingElement a;
  CommutatorWitness x;
  CommutatorWitness y;
  CommutatorWitness z;
  RingElement b;
};

/// 1 = sum_j a_j [x_j, y_j z_j] b_j.
struct SumUnitWitness {
  std::vector<UnitWitnessSummand> summands;
};

/// Exact check of the unit identity (cached bracket values are recomputed).
bool holds(const SingleUnitWitness& witness);
bool holds(const SumUnitWitness& witness);

/// The one-summand form a = s, b = 1.
SumUnitWitness as_sum(const SingleUnitWitness& witness);

}  // namespace ccert
