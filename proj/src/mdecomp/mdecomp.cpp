#include "ccert/mdecomp.hpp"

#include "ccert/error.hpp"

namespace ccert {

namespace {

Certificate finish(Certificate c, TermPolicy policy) {
  return policy == TermPolicy::kDropZero ? normalized(std::move(c)) : c;
}

Matrix antidiag(const Scalar& upper, const Scalar& lower) {
  Matrix m = Matrix::zero(upper.ring(), 2);
  m(0, 1) = upper;
  m(1, 0) = lower;
  return m;
}

// [e11, antidiag(x, -y)] = antidiag(x, y)
CommutatorWitness antidiag_witness(const Scalar& upper, const Scalar& lower) {
  RingRef r = upper.ring();
  return CommutatorWitness::of(Matrix::unit(r, 2, 0, 0), antidiag(upper, -lower));
}

Matrix quat(const Scalar& s) { return Matrix(Ring::quaternions(), 1, {s}); }

Scalar quat_unit(int which) {
  QuaternionParts p{0, 0, 0, 0};
  (which == 1 ? p.x : which == 2 ? p.y : p.z) = 1;
  return Scalar::quaternion(p);
}

}  // namespace

ShiftFrame shift_frame(RingRef ring, std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kSizeTooSmall, "shift frame needs n >= 3");
  ShiftFrame f{n, Matrix::zero(ring, n), Matrix::zero(ring, n), Matrix::zero(ring, n),
               CommutatorWitness::of(Matrix::zero(ring, n), Matrix::zero(ring, n)), n % 2 ? 1u : 2u};
  for (std::size_t j = 0; j + 1 < n; ++j) {
    f.x(j + 1, j) = Scalar::one(ring);
    f.y(j, j + 1) = Scalar::one(ring);
  }
  // Block-diagonal copies of [e12, e21] = diag(1, -1).
  Matrix p = Matrix::zero(ring, n);
  Matrix q = Matrix::zero(ring, n);
  for (std::size_t j = 0; j + f.p_n < n; j += 2) {
    p(j, j + 1) = Scalar::one(ring);
    q(j + 1, j) = Scalar::one(ring);
    f.d(j, j) = Scalar::one(ring);
    f.d(j + 1, j + 1) = -Scalar::one(ring);
  }
  f.d_witness = CommutatorWitness::of(p, q);
  return f;
}

Certificate decompose_2x2(const Matrix& a, TermPolicy policy) {
  if (a.size() != 2) throw Error(ErrorCode::kShapeMismatch, "decompose_2x2 expects a 2x2 matrix");
  RingRef r = a.ring();
  const Scalar one = Scalar::one(r);
  auto diag_witness = CommutatorWitness::of(Matrix::unit(r, 2, 0, 1), Matrix::unit(r, 2, 1, 0));
  Certificate c{a, {}, "mdecomp.2x2"};
  c.terms.emplace_back(PairProduct{diag_witness, antidiag_witness(a(0, 1), -a(1, 0))});
  c.terms.emplace_back(PairProduct{antidiag_witness(one, one), antidiag_witness(a(1, 1), a(0, 0))});
  return finish(std::move(c), policy);
}

PairProduct zero_tail_product(const Matrix& a, const ShiftFrame& frame) {
  const std::size_t n = frame.n;
  if (n < 3) throw Error(ErrorCode::kSizeTooSmall, "zero_tail_product needs n >= 3");
  if (a.size() != n) throw Error(ErrorCode::kShapeMismatch, "matrix does not match shift frame");
  // (x^k a y^k)(i, j) = a(i-k, j-k), so c(i, j) = a(i, j) + c(i-1, j-1).
  Matrix c = a;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) c(i, j) += c(i - 1, j - 1);
  }
  return {CommutatorWitness::of(c * frame.y, frame.x), frame.d_witness};
}

Certificate decompose_nxn(const Matrix& a, TermPolicy policy) {
  const std::size_t n = a.size();
  if (n < 2) throw Error(ErrorCode::kSizeTooSmall, "decompose_nxn needs n >= 2");
  if (n == 2) {
    Certificate c = decompose_2x2(a, policy);
    c.provenance = "mdecomp.nxn";
    return c;
  }
  const ShiftFrame frame = shift_frame(a.ring(), n);
  const std::size_t keep = n - frame.p_n;

  // Preimage b with b d = (first `keep` columns of m); d(j,j) = +-1 there.
  auto preimage = [&](const Matrix& m) {
    Matrix b = Matrix::zero(m.ring(), n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < keep; ++j) b(i, j) = j % 2 ? -m(i, j) : m(i, j);
    }
    return b;
  };

  Matrix tail = Matrix::zero(a.ring(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = keep; j < n; ++j) tail(i, j) = a(i, j);
  }

  Certificate c{a, {}, "mdecomp.nxn"};
  c.terms.emplace_back(zero_tail_product(preimage(a), frame));

  // J tail J has its last p_n columns zero; build there and conjugate back.
  Certificate mirrored{reversal_conjugate(tail), {zero_tail_product(preimage(reversal_conjugate(tail)), frame)},
                       ""};
  mirrored = reversal_conjugate(mirrored);
  c.terms.push_back(std::move(mirrored.terms.front()));
  return finish(std::move(c), policy);
}

Certificate reversal_conjugate(const Certificate& certificate) {
  return map_certificate(certificate, [](const RingElement& e) -> RingElement {
    return reversal_conjugate(e.matrix());
  });
}

Certificate decompose_direct_sum(const DirectSum& a, TermPolicy policy) {
  std::vector<Certificate> parts;
  for (const Matrix& m : a.parts()) parts.push_back(decompose_nxn(m, TermPolicy::kKeepAll));
  Certificate c{a, {}, "mdecomp.direct_sum"};
  for (std::size_t t = 0; t < 2; ++t) {
    std::vector<Matrix> lp, lq, rp, rq;
    for (const Certificate& part : parts) {
      const auto& term = std::get<PairProduct>(part.terms.at(t));
      lp.push_back(term.left.p.matrix());
      lq.push_back(term.left.q.matrix());
      rp.push_back(term.right.p.matrix());
      rq.push_back(term.right.q.matrix());
    }
    c.terms.emplace_back(PairProduct{
        CommutatorWitness::of(DirectSum(std::move(lp)), DirectSum(std::move(lq))),
        CommutatorWitness::of(DirectSum(std::move(rp)), DirectSum(std::move(rq)))});
  }
  return finish(std::move(c), policy);
}

Certificate quaternion_decompose(const Scalar& d, TermPolicy policy) {
  if (d.ring() != Ring::quaternions()) {
    throw Error(ErrorCode::kRingMismatch, "quaternion_decompose expects an element of H");
  }
  const Scalar i = quat_unit(1), j = quat_unit(2), k = quat_unit(3);
  const auto v_witness = CommutatorWitness::of(quat(i), quat(j));  // 2k
  const auto w_witness = CommutatorWitness::of(quat(j), quat(k));  // 2i
  const Scalar v = v_witness.value.matrix()(0, 0);
  const Scalar w = w_witness.value.matrix()(0, 0);
  const Scalar a = *(v * w - w * v).try_invert();
  const Scalar w_inv = *w.try_invert();

  Certificate c{quat(d), {}, "mdecomp.quaternion"};
  c.terms.emplace_back(
      PairProduct{CommutatorWitness::of(quat(d * a * v * w_inv), quat(w)), w_witness});
  c.terms.emplace_back(PairProduct{CommutatorWitness::of(quat(w), quat(d * a)), v_witness});
  return finish(std::move(c), policy);
}

}  // namespace ccert
