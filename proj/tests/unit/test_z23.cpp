#include <cmath>

#include "ccert/z23.hpp"
#include "helpers.hpp"

using namespace ccert;

namespace {

Matrix id6() { return Matrix::identity(test::qq(), 6); }
Z23Element T(int e) { return Z23Element::monomial(e, 0, id6()); }
Z23Element S(int e) { return Z23Element::monomial(0, e, id6()); }

bool admissible(const RingElement& e) { return z23_boundary_check(e.z23()).admissible; }

void check_all_admissible(const Certificate& c) {
  for (const auto& term : c.terms) {
    const auto& p = std::get<PairProduct>(term);
    CHECK(admissible(p.left.p));
    CHECK(admissible(p.left.q));
    CHECK(admissible(p.right.p));
    CHECK(admissible(p.right.q));
  }
}

}  // namespace

TEST_CASE("z23 arithmetic") {
  CHECK(T(16) + S(16) == Z23Element::one());
  CHECK(S(32) == Z23Element::one() - T(16) - T(16) + T(32));
  CHECK(T(3) * S(5) == Z23Element::monomial(3, 5, id6()));
  CHECK((T(4) - T(4)).is_zero());
  Matrix e = Matrix::unit(test::qq(), 6, 0, 1);
  CHECK(commutator(Z23Element::constant(e), T(7)).is_zero());
  CHECK(Z23Element::monomial(0, 17, id6()) == S(1) - Z23Element::monomial(16, 1, id6()));
}

TEST_CASE("z23 embeddings") {
  Matrix m3 = test::ints(test::qq(), {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
  Matrix m2 = test::ints(test::qq(), {{1, 2}, {3, 4}});
  Matrix r = embed_right(m3), l = embed_left(m2);
  CHECK(r(0, 1) == m3(0, 1));
  CHECK(r(3, 4) == m3(0, 1));
  CHECK(r(0, 3).is_zero());
  CHECK(l(0, 3) == m2(0, 1));
  CHECK(l(1, 4) == m2(0, 1));
  CHECK(l * r == r * l);
}

TEST_CASE("z23 boundary checks") {
  Matrix e12 = Matrix::unit(test::qq(), 3, 0, 1);
  BoundaryReport bad = z23_boundary_check(Z23Element::constant(embed_right(e12)));
  CHECK_FALSE(bad.admissible);
  REQUIRE(bad.end.has_value());
  CHECK(*bad.end == 0);
  BoundaryReport bad1 =
      z23_boundary_check(Z23Element::constant(embed_left(Matrix::unit(test::qq(), 2, 0, 1))));
  CHECK_FALSE(bad1.admissible);
  CHECK(*bad1.end == 1);
  CHECK(z23_boundary_check(Z23Element::one()).admissible);
  CHECK(z23_boundary_check(Z23Element::monomial(1, 0, embed_right(e12))).admissible);
  CHECK(z23_boundary_check(Z23Element::monomial(1, 1, Matrix::unit(test::qq(), 6, 0, 5))).admissible);
  CHECK(z23_value_at_zero(T(3)).is_zero());
  CHECK(z23_value_at_one(T(3)) == id6());
  CHECK(z23_value_at_one(S(2)).is_zero());
}

TEST_CASE("z23 evaluation") {
  Z23Element h = T(16);
  NumericMatrix6 v = z23_eval(h, 0.5);
  CHECK(v[0] == doctest::Approx(0.5));
  CHECK(v[1] == doctest::Approx(0.0));
  NumericMatrix6 w = z23_eval(T(8) + S(8), 0.25);
  CHECK(w[7] == doctest::Approx(std::sqrt(0.25) + std::sqrt(0.75)));
  CHECK(test::error_of([&] { z23_eval(h, -0.1); }) == ErrorCode::kOutOfDomain);
  CHECK(test::error_of([&] { z23_eval(h, 1.1); }) == ErrorCode::kOutOfDomain);
  CHECK(z23_max_abs_on_grid(T(16) + T(16) + T(16), 11) == doctest::Approx(3.0));
}

TEST_CASE("z23 unit witness") {
  Z23UnitReport r = z23_verify_unit(101);
  CHECK(r.first_half);
  CHECK(r.second_half);
  CHECK(r.sum_is_one);
  CHECK(r.witnesses_recompute);
  CHECK(r.all_admissible);
  CHECK(r.grid_points == 101);
  CHECK(r.max_residual <= 1e-12);
  CHECK(r.ok(1e-12));
  Z23Witness w = z23_witness();
  CHECK(holds(w.as_sum()));
  CHECK(w.a * commutator(w.q.value, w.r.value * w.s.value) == RingElement(T(16)));
}

TEST_CASE("z23 xi6 examples") {
  CHECK(z23_xi6(Z23Element::zero()).terms.empty());
  for (const Z23Element& a : {Z23Element::one(), T(16), S(16), T(1) * S(1)}) {
    Certificate c = z23_xi6(a);
    CHECK(pair_count(c) <= 6);
    CHECK(single_count(c) == 0);
    CHECK(verify(c).valid);
    check_all_admissible(c);
  }
  CHECK(z23_xi6(Z23Element::one(), TermPolicy::kKeepAll).terms.size() == 6);
  Z23Element bad = Z23Element::constant(embed_right(Matrix::unit(test::qq(), 3, 0, 1)));
  CHECK(test::error_of([&] { z23_xi6(bad); }) == ErrorCode::kInadmissibleInput);
}

TEST_CASE("z23 xi6 random admissible elements") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Z23Element a = z23_random_admissible(seed);
    CHECK(z23_boundary_check(a).admissible);
    Certificate c = z23_xi6(a);
    CHECK(pair_count(c) <= 6);
    CHECK(verify(c).valid);
    check_all_admissible(c);
  }
}
