#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ccert/direct_sum.hpp"
#include "ccert/matrix.hpp"
#include "ccert/z23_element.hpp"

namespace ccert {

/// An element of one of the working rings: M_n(S) (quaternions are 1x1
/// matrices over H), a direct sum of matrix rings, or Z_{2,3}. Mixing
/// working rings throws kRingMismatch.
class RingElement {
 public:
  using Value = std::variant<Matrix, DirectSum, Z23Element>;

  RingElement(Matrix m) : value_(std::move(m)) {}
  RingElement(DirectSum d) : value_(std::move(d)) {}
  RingElement(Z23Element z) : value_(std::move(z)) {}

  const Value& value() const noexcept { return value_; }
  bool is_matrix() const noexcept { return std::holds_alternative<Matrix>(value_); }
  bool is_direct_sum() const noexcept { return std::holds_alternative<DirectSum>(value_); }
  bool is_z23() const noexcept { return std::holds_alternative<Z23Element>(value_); }
  const Matrix& matrix() const;
  const DirectSum& direct_sum() const;
  const Z23Element& z23() const;

  bool is_zero() const;
  RingElement zero_like() const;
  RingElement one_like() const;
  /// True when both live in the same working ring (same kind, rings, sizes).
  bool same_ring(const RingElement& other) const;
  /// Human-readable description of the working ring, e.g. "M3(Z)".
  std::string ring_name() const;

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  Value value_;
};

RingElement commutator(const RingElement& p, const RingElement& q);

/// Tuple element of the product ring; throws kEmptySum for no parts.
RingElement direct_sum_embed(std::vector<Matrix> parts);

}  // namespace ccert
