#pragma once

#include <cstddef>

#include "ccert/certificate.hpp"

namespace ccert {

/// Shift matrices and the diagonal commutator used for n >= 3.
struct ShiftFrame {
  std::size_t n = 0;
  Matrix x;  // sum_j e_{j+1,j}
  Matrix y;  // sum_j e_{j,j+1}
  Matrix d;  // diag(1,-1,...,1,-1,0) or (...,0,0)
  CommutatorWitness d_witness;
  std::size_t p_n = 0;  // 1 for odd n, 2 for even n
};

/// Throws kSizeTooSmall for n < 3.
ShiftFrame shift_frame(RingRef ring, std::size_t n);

/// Two pair products: diag(1,-1) * antidiag(b,-c) + antidiag(1,1) * antidiag(d,a).
Certificate decompose_2x2(const Matrix& a, TermPolicy policy = TermPolicy::kDropZero);

/// One pair product [c y, x] * d with value a * d, where
/// c = a + x a y + ... + x^{n-1} a y^{n-1}.
PairProduct zero_tail_product(const Matrix& a, const ShiftFrame& frame);

/// At most two pair products for any a in M_n(S), n >= 2. Throws
/// kSizeTooSmall for n < 2.
Certificate decompose_nxn(const Matrix& a, TermPolicy policy = TermPolicy::kDropZero);

/// J-conjugate of every element of the certificate.
Certificate reversal_conjugate(const Certificate& certificate);

/// Coordinatewise decompose_nxn in M_{n1}(S) (+) ... (+) M_{nk}(S); at most
/// two pair products.
Certificate decompose_direct_sum(const DirectSum& a, TermPolicy policy = TermPolicy::kDropZero);

/// d = [(d a v) w^-1, w] w + [w, d a] v with v = [i,j] = 2k, w = [j,k] = 2i and
/// a = [v,w]^-1. Elements are 1x1 matrices over H.
Certificate quaternion_decompose(const Scalar& d, TermPolicy policy = TermPolicy::kDropZero);

}  // namespace ccert
