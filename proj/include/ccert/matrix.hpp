#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "ccert/scalar.hpp"

namespace ccert {

/// Square n x n matrix over a coefficient ring, row-major.
class Matrix {
 public:
  static Matrix zero(RingRef ring, std::size_t n);
  static Matrix identity(RingRef ring, std::size_t n);
  /// Matrix unit e_{row,col} (0-based indices).
  static Matrix unit(RingRef ring, std::size_t n, std::size_t row, std::size_t col);
  /// Integer entries mapped through Z -> ring, row-major.
  static Matrix from_integers(RingRef ring, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix diagonal(const std::vector<Scalar>& entries);
  /// Throws kShapeMismatch unless entries.size() == n*n, kRingMismatch on mixed rings.
  Matrix(RingRef ring, std::size_t n, std::vector<Scalar> entries);

  RingRef ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return n_; }

  const Scalar& operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
  Scalar& operator()(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Scalar& s);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix& operator+=(const Matrix& other) { return *this = *this + other; }

 private:
  RingRef ring_;
  std::size_t n_;
  std::vector<Scalar> entries_;
};

/// pq - qp.
Matrix commutator(const Matrix& p, const Matrix& q);

/// Exact determinant. Bareiss elimination over integral domains, memoized
/// division-free Laplace expansion otherwise. Throws
/// kNoncommutativeCoefficients over the quaternions.
Scalar determinant(const Matrix& a);

/// a^-1 = det^-1 * adj(a) when det is a unit; nullopt otherwise.
std::optional<Matrix> adjugate_inverse(const Matrix& a);

/// J a J with J the anti-diagonal permutation: entry (i,j) <- a(n-1-i, n-1-j).
Matrix reversal_conjugate(const Matrix& a);

/// Image under the unit map Z -> ring; entries must be integers.
Matrix change_ring(const Matrix& integral, RingRef ring);

/// Block-diagonal composition of same-ring blocks.
Matrix block_diagonal(const std::vector<Matrix>& blocks);

/// Kronecker product a (x) b (row index = i_a * size(b) + i_b).
Matrix kronecker(const Matrix& a, const Matrix& b);

}  // namespace ccert
