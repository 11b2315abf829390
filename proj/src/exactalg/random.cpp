#include "ccert/random.hpp"

namespace ccert {

mpz_class RandomElements::integer(long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  return mpz_class(d(rng_));
}

Scalar RandomElements::scalar(RingRef ring) {
  switch (ring->kind()) {
    case RingKind::kIntegers:
      return Scalar::from_integer(ring, integer(bounds_.numerator));
    case RingKind::kIntegersMod:
    case RingKind::kPrimeField:
      return Scalar::from_integer(ring, integer(bounds_.numerator));
    case RingKind::kRationals: {
      std::uniform_int_distribution<long> den(1, bounds_.denominator);
      return Scalar::from_rational(ring, mpq_class(integer(bounds_.numerator), mpz_class(den(rng_))));
    }
    case RingKind::kPolynomial: {
      std::uniform_int_distribution<unsigned> deg(0, bounds_.max_degree);
      std::vector<Scalar> coefficients;
      const unsigned d = deg(rng_);
      for (unsigned i = 0; i <= d; ++i) coefficients.push_back(scalar(ring->base()));
      return Scalar::polynomial(ring, std::move(coefficients));
    }
    case RingKind::kQuaternions: {
      std::uniform_int_distribution<long> den(1, bounds_.denominator);
      auto part = [&] {
        mpq_class q(integer(bounds_.numerator), mpz_class(den(rng_)));
        q.canonicalize();
        return q;
      };
      QuaternionParts p;
      p.w = part();
      p.x = part();
      p.y = part();
      p.z = part();
      return Scalar::quaternion(p);
    }
  }
  return Scalar::zero(ring);
}

Matrix RandomElements::matrix(RingRef ring, std::size_t n) {
  std::vector<Scalar> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) entries.push_back(scalar(ring));
  return Matrix(ring, n, std::move(entries));
}

DirectSum RandomElements::direct_sum(RingRef ring, const std::vector<std::size_t>& sizes) {
  std::vector<Matrix> parts;
  for (std::size_t n : sizes) parts.push_back(matrix(ring, n));
  return DirectSum(std::move(parts));
}

}  // namespace ccert
