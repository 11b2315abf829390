#include "ccert/mdecomp.hpp"
#include "ccert/random.hpp"
#include "helpers.hpp"

using namespace ccert;
using test::ints;
using test::zz;

namespace {

Matrix value_of(const CertificateTerm& t) { return term_value(t).matrix(); }

std::vector<RingRef> coefficient_rings() {
  return {Ring::integers(), Ring::rationals(), Ring::integers_mod(6), Ring::prime_field(5),
          Ring::polynomial(Ring::rationals())};
}

}  // namespace

TEST_CASE("2x2 worked example") {
  Certificate c = decompose_2x2(ints(zz(), {{1, 2}, {3, 4}}));
  REQUIRE(c.terms.size() == 2);
  const auto& first = std::get<PairProduct>(c.terms[0]);
  const auto& second = std::get<PairProduct>(c.terms[1]);
  CHECK(first.left.value.matrix() == ints(zz(), {{1, 0}, {0, -1}}));
  CHECK(first.right.value.matrix() == ints(zz(), {{0, 2}, {-3, 0}}));
  CHECK(second.left.value.matrix() == ints(zz(), {{0, 1}, {1, 0}}));
  CHECK(second.right.value.matrix() == ints(zz(), {{0, 4}, {1, 0}}));
  CHECK(value_of(c.terms[0]) + value_of(c.terms[1]) == ints(zz(), {{1, 2}, {3, 4}}));
  CHECK(verify(c).valid);
}

TEST_CASE("2x2 zero matrix") {
  CHECK(decompose_2x2(Matrix::zero(zz(), 2)).terms.empty());
  Certificate raw = decompose_2x2(Matrix::zero(zz(), 2), TermPolicy::kKeepAll);
  CHECK(raw.terms.size() == 2);
  CHECK(verify(raw).valid);
}

TEST_CASE("shift frame") {
  for (std::size_t n = 3; n <= 7; ++n) {
    ShiftFrame f = shift_frame(zz(), n);
    CHECK(f.p_n == (n % 2 ? 1u : 2u));
    CHECK(f.d == f.d_witness.value.matrix());
    CHECK(f.d_witness.recomputes());
    for (std::size_t i = 0; i < n; ++i) {
      long expected = i + f.p_n >= n ? 0 : (i % 2 ? -1 : 1);
      CHECK(f.d(i, i) == Scalar::from_integer(zz(), expected));
    }
  }
  CHECK(test::error_of([] { shift_frame(zz(), 2); }) == ErrorCode::kSizeTooSmall);
}

TEST_CASE("zero tail product: identity n = 3") {
  ShiftFrame f = shift_frame(zz(), 3);
  PairProduct t = zero_tail_product(Matrix::identity(zz(), 3), f);
  // c = diag(1,2,3), [cy, x] = diag(1,1,-2), value = diag(1,-1,0)
  CHECK(t.left.p.matrix() * f.x == ints(zz(), {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}) * f.y * f.x);
  CHECK(t.left.value.matrix() == ints(zz(), {{1, 0, 0}, {0, 1, 0}, {0, 0, -2}}));
  CHECK(value_of(t) == ints(zz(), {{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}));
  CHECK(zero_tail_product(Matrix::zero(zz(), 3), f).left.value.is_zero());
}

TEST_CASE("zero tail product value is a d for random a over Z6") {
  RandomElements source(41);
  RingRef z6 = Ring::integers_mod(6);
  ShiftFrame f = shift_frame(z6, 4);
  CHECK(f.d == Matrix::diagonal({Scalar::from_integer(z6, 1), Scalar::from_integer(z6, -1),
                                 Scalar::zero(z6), Scalar::zero(z6)}));
  for (int i = 0; i < 100; ++i) {
    Matrix a = source.matrix(z6, 4);
    CHECK(value_of(zero_tail_product(a, f)) == a * f.d);
  }
}

TEST_CASE("shift identity [cy, x] = a - c e_nn") {
  RandomElements source(43, {1000, 1000, 3});
  for (RingRef r : coefficient_rings()) {
    for (std::size_t n = 3; n <= 6; ++n) {
      ShiftFrame f = shift_frame(r, n);
      Matrix a = source.matrix(r, n);
      PairProduct t = zero_tail_product(a, f);
      Matrix cyx = t.left.value.matrix();
      // recompute c independently: sum_k x^k a y^k
      Matrix expected_c = Matrix::zero(r, n);
      Matrix xk = Matrix::identity(r, n), yk = Matrix::identity(r, n);
      for (std::size_t k = 0; k < n; ++k) {
        expected_c += xk * a * yk;
        xk = xk * f.x;
        yk = yk * f.y;
      }
      CHECK(t.left.p.matrix() == expected_c * f.y);
      CHECK(cyx == a - expected_c * Matrix::unit(r, n, n - 1, n - 1));
    }
  }
}

TEST_CASE("n x n examples") {
  Certificate id = decompose_nxn(Matrix::identity(zz(), 3));
  CHECK(id.terms.size() == 2);
  CHECK(verify(id).valid);
  Matrix last_zero = ints(zz(), {{1, 2, 0}, {3, 4, 0}, {5, 6, 0}});
  Certificate one = decompose_nxn(last_zero);
  CHECK(one.terms.size() == 1);
  CHECK(verify(one).valid);
  CHECK(decompose_nxn(Matrix::zero(zz(), 4)).terms.empty());
  CHECK(test::error_of([] { decompose_nxn(Matrix::identity(zz(), 1)); }) == ErrorCode::kSizeTooSmall);
}

TEST_CASE("n x n random property over every coefficient ring") {
  RandomElements source(5150, {1000000, 1000000, 8});
  for (RingRef r : coefficient_rings()) {
    CAPTURE(r->name());
    for (std::size_t n = 2; n <= 6; ++n) {
      for (int i = 0; i < 40; ++i) {
        Matrix a = source.matrix(r, n);
        Certificate c = decompose_nxn(a);
        CHECK(c.target == RingElement(a));
        CHECK(pair_count(c) <= 2);
        CHECK(single_count(c) == 0);
        CHECK(verify(c).valid);
      }
    }
  }
}

TEST_CASE("conjugation equivariance") {
  RandomElements source(77);
  for (std::size_t n = 3; n <= 6; ++n) {
    Matrix a = source.matrix(Ring::integers_mod(6), n);
    Certificate mirrored = decompose_nxn(reversal_conjugate(a));
    CHECK(verify(mirrored).valid);
    Certificate back = reversal_conjugate(mirrored);
    CHECK(back.target == RingElement(a));
    CHECK(verify(back).valid);
  }
}

TEST_CASE("direct sum decomposition") {
  RandomElements source(78);
  for (int i = 0; i < 20; ++i) {
    DirectSum a = source.direct_sum(zz(), {2, 3, 4});
    Certificate c = decompose_direct_sum(a);
    CHECK(pair_count(c) <= 2);
    CHECK(verify(c).valid);
  }
}

TEST_CASE("quaternion worked example d = 1") {
  Certificate c = quaternion_decompose(Scalar::one(Ring::quaternions()), TermPolicy::kKeepAll);
  REQUIRE(c.terms.size() == 2);
  CHECK(value_of(c.terms[0]).is_zero());
  CHECK(value_of(c.terms[1]) == Matrix::identity(Ring::quaternions(), 1));
  const auto& first = std::get<PairProduct>(c.terms[0]);
  CHECK(first.left.p.matrix()(0, 0) == Scalar::from_rational(Ring::quaternions(), mpq_class(-1, 8)));
  CHECK(verify(c).valid);
  CHECK(quaternion_decompose(Scalar::one(Ring::quaternions())).terms.size() == 1);
}

TEST_CASE("quaternion examples and property") {
  CHECK(quaternion_decompose(Scalar::zero(Ring::quaternions())).terms.empty());
  QuaternionParts p{0, 1, 2, mpq_class(-1, 3)};
  Certificate c = quaternion_decompose(Scalar::quaternion(p));
  CHECK(c.terms.size() == 2);
  CHECK(verify(c).valid);
  RandomElements source(79);
  for (int i = 0; i < 200; ++i) {
    Certificate r = quaternion_decompose(source.scalar(Ring::quaternions()));
    CHECK(pair_count(r) <= 2);
    CHECK(verify(r).valid);
  }
  CHECK(test::error_of([] { quaternion_decompose(Scalar::one(zz())); }) == ErrorCode::kRingMismatch);
}
