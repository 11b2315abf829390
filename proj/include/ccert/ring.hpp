#pragma once

#include <gmpxx.h>

#include <string>

namespace ccert {

enum class RingKind {
  kIntegers,
  kRationals,
  kIntegersMod,
  kPrimeField,
  kPolynomial,
  kQuaternions,
};

class Ring;

/// Descriptors are interned: two descriptors denote the same ring iff the
/// pointers are equal. They are never freed.
using RingRef = const Ring*;

class Ring {
 public:
  static RingRef integers();
  static RingRef rationals();
  /// Throws kInvalidArgument unless m >= 2.
  static RingRef integers_mod(const mpz_class& m);
  /// Throws kInvalidArgument unless p is prime.
  static RingRef prime_field(const mpz_class& p);
  /// Base must be Z, Q, Zm or Fp.
  static RingRef polynomial(RingRef base, const std::string& variable = "x");
  /// Rational quaternions w + xi + yj + zk.
  static RingRef quaternions();

  RingKind kind() const noexcept { return kind_; }
  /// m for Zm, p for Fp; zero otherwise.
  const mpz_class& modulus() const noexcept { return modulus_; }
  RingRef base() const noexcept { return base_; }
  const std::string& variable() const noexcept { return variable_; }

  bool is_commutative() const noexcept { return kind_ != RingKind::kQuaternions; }
  /// Commutative without zero divisors (Bareiss determinant is valid).
  bool is_integral_domain() const noexcept;
  /// Z/mZ with m prime behaves like Fp; kind stays kIntegersMod.
  bool is_residue_ring() const noexcept {
    return kind_ == RingKind::kIntegersMod || kind_ == RingKind::kPrimeField;
  }

  /// Short name: "Z", "Q", "Z6", "F5", "Q[x]", "H".
  const std::string& name() const noexcept { return name_; }

  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

 private:
  Ring(RingKind kind, mpz_class modulus, RingRef base, std::string variable,
       std::string name);

  static RingRef intern(RingKind kind, const mpz_class& modulus, RingRef base,
                        const std::string& variable, const std::string& name);

  RingKind kind_;
  mpz_class modulus_;
  RingRef base_ = nullptr;
  std::string variable_;
  std::string name_;
};

}  // namespace ccert
