#pragma once

#include <cstdint>
#include <vector>

#include "ccert/certificate.hpp"
#include "ccert/unit_witness.hpp"
#include "ccert/z23_element.hpp"

namespace ccert {

/// 1 = a [q, r s] + b [x, y z] in Z_{2,3}; q, r, s carry generating pairs
/// built from the 3x3 triple, x, y, z from the 2x2 triple.
struct Z23Witness {
  RingElement a;
  CommutatorWitness q, r, s;
  RingElement b;
  CommutatorWitness x, y, z;

  SumUnitWitness as_sum() const;
};

Z23Witness z23_witness();

struct Z23UnitReport {
  bool first_half = false;   // a[q, rs] == T^16 1
  bool second_half = false;  // b[x, yz] == S^16 1
  bool sum_is_one = false;
  bool witnesses_recompute = false;
  bool all_admissible = false;
  double max_residual = 0.0;  // over the sampling grid, from evaluated factors
  int grid_points = 0;

  bool ok(double tolerance) const {
    return first_half && second_half && sum_is_one && witnesses_recompute && all_admissible &&
           max_residual <= tolerance;
  }
};

/// Exact canonical-form check plus a numeric residual on an evenly spaced grid.
Z23UnitReport z23_verify_unit(int grid_points = 101);

/// At most six pair products for an admissible element. Throws
/// kInadmissibleInput otherwise.
Certificate z23_xi6(const Z23Element& a, TermPolicy policy = TermPolicy::kDropZero);

/// Largest entrywise |x(t)| over an evenly spaced grid.
double z23_max_abs_on_grid(const Z23Element& x, int grid_points = 101);

/// A random boundary-admissible element with small integer coefficients.
Z23Element z23_random_admissible(std::uint64_t seed);

}  // namespace ccert
