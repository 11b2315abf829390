#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "ccert/ring.hpp"

namespace ccert {

/// Payload of a rational quaternion w + xi + yj + zk.
struct QuaternionParts {
  mpq_class w, x, y, z;

  bool operator==(const QuaternionParts&) const = default;
};

/// An exact element of a coefficient ring, always in canonical form:
/// fractions reduced with positive denominator, residues in [0, m),
/// polynomials without trailing zero coefficients.
class Scalar {
 public:
  static Scalar zero(RingRef ring);
  static Scalar one(RingRef ring);
  /// Image of an integer under the unit map Z -> ring.
  static Scalar from_integer(RingRef ring, const mpz_class& value);
  static Scalar from_integer(RingRef ring, long value) {
    return from_integer(ring, mpz_class(value));
  }
  /// Q or H only (the fraction is embedded as a real part for H).
  static Scalar from_rational(RingRef ring, const mpq_class& value);
  static Scalar quaternion(QuaternionParts parts);
  /// Coefficients listed from degree 0 upward; each must live in ring->base().
  static Scalar polynomial(RingRef ring, std::vector<Scalar> coefficients);

  RingRef ring() const noexcept { return ring_; }

  bool is_zero() const;
  bool is_one() const;

  /// Integer payload (Z, Zm, Fp).
  const mpz_class& integer() const;
  /// Rational payload (Q).
  const mpq_class& rational() const;
  const QuaternionParts& quaternion_parts() const;
  /// Polynomial coefficients, degree 0 first; empty for zero.
  const std::vector<Scalar>& coefficients() const;

  /// Inverse when a two-sided inverse exists; nullopt otherwise.
  std::optional<Scalar> try_invert() const;

  /// Canonical text form, parseable by parse().
  std::string to_string() const;
  /// Throws kMalformedInput on text that is not a scalar of `ring`.
  static Scalar parse(RingRef ring, const std::string& text);

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  /// Throws kRingMismatch when descriptors differ.
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }

 private:
  using Payload =
      std::variant<mpz_class, mpq_class, QuaternionParts, std::vector<Scalar>>;

  Scalar(RingRef ring, Payload payload) : ring_(ring), payload_(std::move(payload)) {}

  static Scalar reduce_residue(RingRef ring, mpz_class value);
  static Scalar trimmed_polynomial(RingRef ring, std::vector<Scalar> coefficients);

  RingRef ring_;
  Payload payload_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace ccert
