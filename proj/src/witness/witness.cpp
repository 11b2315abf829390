#include "ccert/witness.hpp"

#include "ccert/error.hpp"

namespace ccert {

namespace {

RingRef zz() { return Ring::integers(); }

struct Pair {
  Matrix p;
  Matrix q;
};

struct RawTriple {
  Pair u, v, w;
};

RawTriple base_triple(std::size_t n) {
  if (n == 2) {
    // u = [e12, e22] = e12, v = [e21, e11] = e21, w = [u, v] = diag(1, -1)
    Matrix e12 = Matrix::unit(zz(), 2, 0, 1);
    Matrix e21 = Matrix::unit(zz(), 2, 1, 0);
    return {{e12, Matrix::unit(zz(), 2, 1, 1)},
            {e21, Matrix::unit(zz(), 2, 0, 0)},
            {e12, e21}};
  }
  Matrix u = Matrix::from_integers(zz(), {{0, 0, 1}, {1, 0, 0}, {0, 0, 0}});
  Matrix v = Matrix::from_integers(zz(), {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  return {{Matrix::from_integers(zz(), {{1, 0, 0}, {0, 2, 0}, {0, 0, 0}}), u},
          {v, Matrix::from_integers(zz(), {{2, 0, 0}, {0, 1, 0}, {0, 0, 0}})},
          {Matrix::from_integers(zz(), {{0, 1, 0}, {0, 0, 2}, {0, 0, 0}}), v}};
}

Pair stack(const std::vector<Pair>& blocks) {
  std::vector<Matrix> ps, qs;
  for (const auto& b : blocks) {
    ps.push_back(b.p);
    qs.push_back(b.q);
  }
  return {block_diagonal(ps), block_diagonal(qs)};
}

CommutatorWitness lift(const Pair& pair) { return CommutatorWitness::of(pair.p, pair.q); }

}  // namespace

WitnessTriple witness_triple(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::kSizeTooSmall, "witness triples need n >= 2");
  std::vector<std::size_t> sizes;
  if (n <= 3) {
    sizes = {n};
  } else {
    const std::size_t threes = n % 2;
    sizes.assign((n - 3 * threes) / 2, 2);
    if (threes) sizes.push_back(3);
  }
  std::vector<Pair> us, vs, ws;
  for (std::size_t size : sizes) {
    RawTriple t = base_triple(size);
    us.push_back(t.u);
    vs.push_back(t.v);
    ws.push_back(t.w);
  }
  WitnessTriple out{n, lift(stack(us)), lift(stack(vs)), lift(stack(ws)),
                    Matrix::zero(zz(), n), Matrix::zero(zz(), n)};
  out.bracket_uv = commutator(out.u.value.matrix(), out.v.value.matrix());
  auto inverse = adjugate_inverse(out.bracket_uv);
  if (!inverse) throw Error(ErrorCode::kInvalidWitness, "[u,v] is not invertible over Z");
  out.s = *inverse;
  return out;
}

WitnessTripleCheck check_witness_triple(const WitnessTriple& t) {
  WitnessTripleCheck c;
  c.brackets_recompute = t.u.recomputes() && t.v.recomputes() && t.w.recomputes() &&
                         commutator(t.u.value.matrix(), t.v.value.matrix()) == t.bracket_uv;
  Scalar det = determinant(t.bracket_uv);
  c.det_is_unit = det.integer() == 1 || det.integer() == -1;
  const Matrix& v = t.v.value.matrix();
  const Matrix& w = t.w.value.matrix();
  c.v_absorbs_w = v * w == v;
  c.unit_identity = t.s * commutator(t.u.value.matrix(), v * w) == Matrix::identity(zz(), t.n);
  return c;
}

SingleUnitWitness matrix_unit_witness(std::size_t n, RingRef ring) {
  WitnessTriple t = witness_triple(n);
  auto map = [&](const CommutatorWitness& w) {
    return CommutatorWitness::of(change_ring(w.p.matrix(), ring), change_ring(w.q.matrix(), ring));
  };
  return {change_ring(t.s, ring), map(t.u), map(t.v), map(t.w)};
}

SingleUnitWitness subring_witness(const std::vector<std::size_t>& parts, RingRef ring) {
  if (parts.empty()) throw Error(ErrorCode::kEmptySum, "subring witness needs at least one summand");
  std::vector<Matrix> s, up, uq, vp, vq, wp, wq;
  for (std::size_t n : parts) {
    SingleUnitWitness part = matrix_unit_witness(n, ring);
    s.push_back(part.s.matrix());
    up.push_back(part.u.p.matrix());
    uq.push_back(part.u.q.matrix());
    vp.push_back(part.v.p.matrix());
    vq.push_back(part.v.q.matrix());
    wp.push_back(part.w.p.matrix());
    wq.push_back(part.w.q.matrix());
  }
  auto sum = [](std::vector<Matrix> m) { return RingElement(DirectSum(std::move(m))); };
  return {sum(s), CommutatorWitness::of(sum(up), sum(uq)),
          CommutatorWitness::of(sum(vp), sum(vq)), CommutatorWitness::of(sum(wp), sum(wq))};
}

SumUnitWitness coordinate_sum_witness(const std::vector<std::size_t>& parts, RingRef ring) {
  const SingleUnitWitness whole = subring_witness(parts, ring);
  const DirectSum& s = whole.s.direct_sum();
  const RingElement one = whole.s.one_like();
  SumUnitWitness out;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    std::vector<Matrix> masked;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      masked.push_back(i == j ? s.parts()[i] : Matrix::zero(ring, parts[i]));
    }
    out.summands.push_back({DirectSum(std::move(masked)), whole.u, whole.v, whole.w, one});
  }
  return out;
}

}  // namespace ccert
