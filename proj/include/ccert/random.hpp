#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ccert/direct_sum.hpp"
#include "ccert/matrix.hpp"

namespace ccert {

/// Bounds for random test inputs.
struct RandomBounds {
  long numerator = 1000000;    // |integer| and |numerator| bound
  long denominator = 1000000;  // denominators drawn from 1..bound
  unsigned max_degree = 8;     // polynomial degree bound
};

/// Seeded source of random exact elements.
class RandomElements {
 public:
  explicit RandomElements(std::uint64_t seed, RandomBounds bounds = {})
      : rng_(seed), bounds_(bounds) {}

  Scalar scalar(RingRef ring);
  Matrix matrix(RingRef ring, std::size_t n);
  DirectSum direct_sum(RingRef ring, const std::vector<std::size_t>& sizes);
  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  mpz_class integer(long bound);

  std::mt19937_64 rng_;
  RandomBounds bounds_;
};

}  // namespace ccert
