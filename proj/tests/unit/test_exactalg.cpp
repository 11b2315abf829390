#include <random>

#include "ccert/direct_sum.hpp"
#include "ccert/random.hpp"
#include "ccert/ring_element.hpp"
#include "helpers.hpp"

using namespace ccert;
using test::ints;

namespace {

std::vector<RingRef> sample_rings() {
  return {Ring::integers(),
          Ring::rationals(),
          Ring::integers_mod(6),
          Ring::prime_field(5),
          Ring::polynomial(Ring::rationals()),
          Ring::polynomial(Ring::integers_mod(6)),
          Ring::quaternions()};
}

Scalar q(long num, long den = 1) { return Scalar::from_rational(Ring::rationals(), mpq_class(num, den)); }

Scalar quat(long w, long x, long y, long z) { return Scalar::quaternion({w, x, y, z}); }

}  // namespace

TEST_CASE("ring descriptors") {
  CHECK(Ring::integers_mod(6)->name() == "Z6");
  CHECK(Ring::prime_field(5)->name() == "F5");
  CHECK(Ring::polynomial(Ring::rationals())->name() == "Q[x]");
  CHECK(Ring::integers_mod(6) == Ring::integers_mod(6));
  CHECK(test::error_of([] { Ring::integers_mod(1); }) == ErrorCode::kInvalidArgument);
  CHECK(test::error_of([] { Ring::prime_field(6); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("scalar arithmetic examples") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  RingRef z6 = Ring::integers_mod(6);
  CHECK(Scalar::from_integer(z6, 4) * Scalar::from_integer(z6, 5) == Scalar::from_integer(z6, 2));
  CHECK(Scalar::from_integer(z6, -1).integer() == 5);
  CHECK(quat(0, 1, 0, 0) * quat(0, 0, 1, 0) == quat(0, 0, 0, 1));
  CHECK(quat(0, 0, 1, 0) * quat(0, 0, 0, 1) == quat(0, 1, 0, 0));
  CHECK(quat(0, 0, 0, 1) * quat(0, 1, 0, 0) == quat(0, 0, 1, 0));
  CHECK(quat(0, 1, 0, 0) * quat(0, 1, 0, 0) == quat(-1, 0, 0, 0));
  CHECK(test::error_of([&] { (void)(q(1) + Scalar::one(Ring::integers())); }) == ErrorCode::kRingMismatch);
}

TEST_CASE("try_invert examples") {
  RingRef z = Ring::integers();
  CHECK(*Scalar::from_integer(z, -1).try_invert() == Scalar::from_integer(z, -1));
  CHECK_FALSE(Scalar::from_integer(z, 2).try_invert().has_value());
  // (2i)^-1 = -i/2
  QuaternionParts expected{0, mpq_class(-1, 2), 0, 0};
  CHECK(*quat(0, 2, 0, 0).try_invert() == Scalar::quaternion(expected));
  CHECK_FALSE(Scalar::from_integer(Ring::integers_mod(6), 2).try_invert().has_value());
  CHECK(*Scalar::from_integer(Ring::integers_mod(6), 5).try_invert() ==
        Scalar::from_integer(Ring::integers_mod(6), 5));
  // 1 + 3x is a unit in Z9[x]: (1+3x)(1-3x) = 1 - 9x^2 = 1
  RingRef z9x = Ring::polynomial(Ring::integers_mod(9));
  Scalar p = Scalar::parse(z9x, "1+3*x");
  CHECK(*p.try_invert() * p == Scalar::one(z9x));
  CHECK_FALSE(Scalar::parse(Ring::polynomial(Ring::rationals()), "x").try_invert().has_value());
}

TEST_CASE("scalar text round trip") {
  RingRef qx = Ring::polynomial(Ring::rationals());
  Scalar p = Scalar::parse(qx, "3*x^2-1");
  CHECK(p.to_string() == "3*x^2-1");
  CHECK(Scalar::parse(qx, p.to_string()) == p);
  Scalar h = Scalar::parse(Ring::quaternions(), "1+2i-j+0k");
  CHECK(h == quat(1, 2, -1, 0));
  CHECK(Scalar::parse(Ring::quaternions(), h.to_string()) == h);
  CHECK(Scalar::parse(Ring::rationals(), "-6/4") == q(-3, 2));
  CHECK(test::error_of([] { Scalar::parse(Ring::integers(), "1/2"); }) == ErrorCode::kMalformedInput);
  RandomElements source(11, {50, 20, 4});
  for (RingRef r : sample_rings()) {
    for (int i = 0; i < 200; ++i) {
      Scalar s = source.scalar(r);
      CHECK(Scalar::parse(r, s.to_string()) == s);
    }
  }
}

TEST_CASE("scalar ring axioms on random triples") {
  RandomElements source(2024, {1000, 1000, 3});
  for (RingRef r : sample_rings()) {
    CAPTURE(r->name());
    const int triples = r->kind() == RingKind::kPolynomial || r->kind() == RingKind::kQuaternions ? 10000 : 20000;
    bool ok = true;
    for (int i = 0; i < triples && ok; ++i) {
      Scalar x = source.scalar(r), y = source.scalar(r), z = source.scalar(r);
      ok = (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z && (x + y) * z == x * z + y * z &&
           (x + (-x)).is_zero() && x + y == y + x;
    }
    CHECK(ok);
  }
}

TEST_CASE("inverse property") {
  RandomElements source(7, {1000, 1000, 2});
  for (RingRef r : sample_rings()) {
    for (int i = 0; i < 500; ++i) {
      Scalar x = source.scalar(r);
      if (auto y = x.try_invert()) {
        CHECK((x * *y).is_one());
        CHECK((*y * x).is_one());
      }
    }
  }
}

TEST_CASE("matrix commutator examples") {
  RingRef z = Ring::integers();
  CHECK(commutator(Matrix::unit(z, 2, 0, 1), Matrix::unit(z, 2, 1, 0)) == ints(z, {{1, 0}, {0, -1}}));
  Matrix x = ints(z, {{1, 2}, {3, 4}});
  CHECK(commutator(x, x).is_zero());
  Matrix u = commutator(ints(z, {{1, 0, 0}, {0, 2, 0}, {0, 0, 0}}), ints(z, {{0, 0, 1}, {1, 0, 0}, {0, 0, 0}}));
  Matrix v = commutator(ints(z, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), ints(z, {{2, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
  CHECK(commutator(u, v) == ints(z, {{0, 1, 0}, {0, 0, -1}, {-1, 0, 0}}));
  CHECK(test::error_of([&] { commutator(x, Matrix::identity(z, 3)); }) == ErrorCode::kShapeMismatch);
  CHECK(test::error_of([&] { commutator(x, Matrix::identity(Ring::rationals(), 2)); }) ==
        ErrorCode::kRingMismatch);
}

TEST_CASE("determinant examples") {
  RingRef z = Ring::integers();
  CHECK(determinant(ints(z, {{1, 0}, {0, -1}})).integer() == -1);
  CHECK(determinant(ints(z, {{0, 1, 0}, {0, 0, -1}, {-1, 0, 0}})).integer() == 1);
  CHECK(determinant(Matrix::identity(z, 4)).integer() == 1);
  CHECK(determinant(ints(z, {{2, 3, 1}, {4, 1, 5}, {7, 2, 2}})).integer() == 2 * (2 - 10) - 3 * (8 - 35) + (8 - 7));
  CHECK(test::error_of([] { determinant(Matrix::identity(Ring::quaternions(), 2)); }) ==
        ErrorCode::kNoncommutativeCoefficients);
}

TEST_CASE("determinant is multiplicative") {
  RandomElements source(99, {20, 20, 2});
  std::vector<RingRef> rings{Ring::integers(), Ring::rationals(), Ring::integers_mod(6), Ring::prime_field(5),
                             Ring::polynomial(Ring::integers_mod(6)), Ring::polynomial(Ring::integers())};
  for (RingRef r : rings) {
    CAPTURE(r->name());
    for (std::size_t n = 1; n <= 4; ++n) {
      for (int i = 0; i < 20; ++i) {
        Matrix a = source.matrix(r, n), b = source.matrix(r, n);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
      }
    }
  }
}

TEST_CASE("determinant over Zm agrees with the integer determinant reduced") {
  RandomElements source(5, {9, 1, 0});
  RingRef z12 = Ring::integers_mod(12);
  for (std::size_t n = 2; n <= 7; ++n) {
    Matrix a = source.matrix(Ring::integers(), n);
    mpz_class expected = determinant(a).integer();
    CHECK(determinant(change_ring(a, z12)) == Scalar::from_integer(z12, expected));
  }
}

TEST_CASE("adjugate inverse") {
  RingRef z = Ring::integers();
  Matrix d = ints(z, {{1, 0}, {0, -1}});
  CHECK(*adjugate_inverse(d) == d);
  Matrix b = ints(z, {{0, 1, 0}, {0, 0, -1}, {-1, 0, 0}});
  CHECK(*adjugate_inverse(b) == ints(z, {{0, 0, -1}, {1, 0, 0}, {0, -1, 0}}));
  CHECK_FALSE(adjugate_inverse(Scalar::from_integer(z, 2) * Matrix::identity(z, 3)).has_value());
  RandomElements source(3, {50, 50, 1});
  for (RingRef r : {Ring::rationals(), Ring::prime_field(7), Ring::integers_mod(6)}) {
    for (int i = 0; i < 50; ++i) {
      Matrix a = source.matrix(r, 3);
      if (auto inv = adjugate_inverse(a)) {
        CHECK(*inv * a == Matrix::identity(r, 3));
        CHECK(a * *inv == Matrix::identity(r, 3));
      }
    }
  }
}

TEST_CASE("reversal conjugation") {
  RingRef z = Ring::integers();
  CHECK(reversal_conjugate(Matrix::unit(z, 3, 0, 0)) == Matrix::unit(z, 3, 2, 2));
  CHECK(reversal_conjugate(Matrix::identity(z, 3)) == Matrix::identity(z, 3));
  RandomElements source(17);
  RingRef z6 = Ring::integers_mod(6);
  for (int i = 0; i < 100; ++i) {
    Matrix p = source.matrix(z6, 3), qm = source.matrix(z6, 3);
    CHECK(reversal_conjugate(commutator(p, qm)) == commutator(reversal_conjugate(p), reversal_conjugate(qm)));
    CHECK(reversal_conjugate(p * qm) == reversal_conjugate(p) * reversal_conjugate(qm));
    CHECK(reversal_conjugate(p + qm) == reversal_conjugate(p) + reversal_conjugate(qm));
    CHECK(reversal_conjugate(reversal_conjugate(p)) == p);
  }
}

TEST_CASE("direct sums act coordinatewise") {
  RingRef z = Ring::integers();
  RingElement one = direct_sum_embed({Matrix::identity(z, 2), Matrix::identity(z, 3)});
  CHECK(one == one.one_like());
  RandomElements source(8, {10, 1, 0});
  DirectSum a = source.direct_sum(z, {2, 3});
  DirectSum b = source.direct_sum(z, {2, 3});
  RingElement c = commutator(RingElement(a), RingElement(b));
  CHECK(c.direct_sum().parts()[0] == commutator(a.parts()[0], b.parts()[0]));
  CHECK(c.direct_sum().parts()[1] == commutator(a.parts()[1], b.parts()[1]));
  CHECK(test::error_of([] { direct_sum_embed({}); }) == ErrorCode::kEmptySum);
  CHECK(test::error_of([&] { (void)(RingElement(a) + RingElement(Matrix::identity(z, 2))); }) ==
        ErrorCode::kRingMismatch);
  CHECK(RingElement(a).ring_name() == "M2(Z)+M3(Z)");
}

TEST_CASE("kronecker and block diagonal") {
  RingRef z = Ring::integers();
  Matrix a = ints(z, {{1, 2}, {3, 4}});
  Matrix k = kronecker(a, Matrix::identity(z, 2));
  CHECK(k == ints(z, {{1, 0, 2, 0}, {0, 1, 0, 2}, {3, 0, 4, 0}, {0, 3, 0, 4}}));
  Matrix b = block_diagonal({a, Matrix::identity(z, 1)});
  CHECK(b == ints(z, {{1, 2, 0}, {3, 4, 0}, {0, 0, 1}}));
}
