#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccert/unit_witness.hpp"

namespace ccert {

/// left * [p, q] * right, with absent multipliers read as 1.
struct ScaledBracket {
  std::optional<RingElement> left;
  CommutatorWitness bracket;
  std::optional<RingElement> right;

  RingElement value() const;
};

/// a[x,y]b = a[[b,y],x] + a[[x,b],y] + ab[x,y].
std::array<ScaledBracket, 3> lemma31_expand(const RingElement& a, const RingElement& x,
                                            const RingElement& y, const RingElement& b);

/// a[x,y] = [ax, y] + [y, a] x.
std::pair<SingleCommutator, ScaledBracket> lemma32_split(const RingElement& a, const RingElement& x,
                                                         const RingElement& y);

/// c[p, q1 q2] = [cp, q1] q2 + q1 [cp, q2] + [q1 q2, c] p as three pair
/// products. Throws kNotACommutator when a witness cache does not recompute.
std::array<PairProduct, 3> lemma33_core(const RingElement& c, const CommutatorWitness& p,
                                        const CommutatorWitness& q1, const CommutatorWitness& q2);

/// a = [(as)u, v] w + v [(as)u, w] + [vw, as] u. Throws kInvalidWitness
/// unless 1 = s[u, vw] in a's ring.
Certificate xi3_decompose(const RingElement& a, const SingleUnitWitness& witness,
                          TermPolicy policy = TermPolicy::kDropZero);

/// a = [(as)u, v] + [v, as] u, using 1 = s[u, v] (implied by v w = v).
Certificate mixed_decompose(const RingElement& a, const SingleUnitWitness& witness,
                            TermPolicy policy = TermPolicy::kDropZero);

/// At most 12 pair products per summand of 1 = sum_j a_j [x_j, y_j z_j] b_j.
Certificate pipeline_12d(const RingElement& a, const SumUnitWitness& witness,
                         TermPolicy policy = TermPolicy::kDropZero);

// ---------------------------------------------------------------------------
// Bound calculator

struct BoundRule {
  unsigned long long bound = 0;
  std::string rule;       // e.g. "matrix-ring"
  bool constructive = false;
  std::string algorithm;  // empty when only a bound is known
};

/// Parses a structural description and lists every applicable bound on xi.
///   M<n>(S)            matrix ring over a unital ring, n >= 2
///   A+B+...            direct sum of matrix rings
///   H | Quat           rational quaternions (noncommutative division ring)
///   Z23                the dimension-drop algebra
///   contains(X)        unital ring with a unital copy of structure X
///   contains(xi=N)     unital ring with a unital subring S, xi(S) = N
/// Throws kUnknownStructure when no rule applies.
std::vector<BoundRule> xi_upper_bound(const std::string& structure);

}  // namespace ccert
