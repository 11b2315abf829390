#pragma once

#include <cstddef>
#include <vector>

#include "ccert/unit_witness.hpp"

namespace ccert {

/// Commutators u, v, w in M_n(Z) with [u,v] invertible and v w = v; s is the
/// integral inverse of [u,v], so 1 = s [u, v w].
struct WitnessTriple {
  std::size_t n = 0;
  CommutatorWitness u;
  CommutatorWitness v;
  CommutatorWitness w;
  Matrix bracket_uv;
  Matrix s;
};

/// n = 2 and n = 3 use fixed integral matrices; larger n are block-diagonal
/// with 2x2 blocks first and at most one trailing 3x3 block. Throws
/// kSizeTooSmall for n < 2.
WitnessTriple witness_triple(std::size_t n);

struct WitnessTripleCheck {
  bool brackets_recompute = false;
  bool det_is_unit = false;
  bool v_absorbs_w = false;  // v w = v
  bool unit_identity = false;  // s [u, v w] = 1

  bool all() const { return brackets_recompute && det_is_unit && v_absorbs_w && unit_identity; }
};

/// Re-derives every invariant from the stored matrices.
WitnessTripleCheck check_witness_triple(const WitnessTriple& triple);

/// The triple mapped into M_n(ring) through Z -> ring, as matrix elements.
SingleUnitWitness matrix_unit_witness(std::size_t n, RingRef ring);

/// Coordinatewise witness in M_{n1}(ring) (+) ... (+) M_{nk}(ring). Throws
/// kEmptySum for no parts and kSizeTooSmall for any n_j < 2.
SingleUnitWitness subring_witness(const std::vector<std::size_t>& parts,
                                  RingRef ring = Ring::integers());

/// 1 = sum_j a_j [u, v w] over the summands: a_j is s restricted to the
/// j-th coordinate (zero elsewhere), so d equals the number of summands.
SumUnitWitness coordinate_sum_witness(const std::vector<std::size_t>& parts,
                                      RingRef ring = Ring::integers());

}  // namespace ccert
