#include "ccert/explore.hpp"
#include "helpers.hpp"

using namespace ccert;

namespace {

Subset single(const FiniteRing& r, FiniteRing::Index i) {
  Subset s(r.size());
  s.insert(i);
  return s;
}

// Z4 as tables: elements 0..3.
FiniteRing z4_tables(bool broken_mul = false) {
  std::vector<FiniteRing::Index> add(16), mul(16);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      add[a * 4 + b] = static_cast<FiniteRing::Index>((a + b) % 4);
      mul[a * 4 + b] = static_cast<FiniteRing::Index>((a * b) % 4);
    }
  }
  if (broken_mul) mul[2 * 4 + 3] = 1;
  return FiniteRing::from_tables("Z4", 4, add, mul, 0, 1);
}

}  // namespace

TEST_CASE("generated ring sizes") {
  CHECK(FiniteRing::generate("Z6").size() == 6);
  CHECK(FiniteRing::generate("F4").size() == 4);
  CHECK(FiniteRing::generate("F9").size() == 9);
  CHECK(FiniteRing::generate("M2(F2)").size() == 16);
  CHECK(FiniteRing::generate("M2(Z4)").size() == 256);
  CHECK(FiniteRing::generate("U2(F2)").size() == 8);
  CHECK(FiniteRing::generate("U3(F2)").size() == 64);
  CHECK(FiniteRing::generate("N3(F2)").size() == 8);
  CHECK_FALSE(FiniteRing::generate("N3(F2)").one().has_value());
  CHECK(FiniteRing::generate("0").size() == 1);
  for (const char* bad : {"F6", "Z1", "M2(Q)", "X", "M0(F2)"}) {
    CAPTURE(bad);
    CHECK(test::error_of([&] { FiniteRing::generate(bad); }) == ErrorCode::kUnknownRingSpec);
  }
}

TEST_CASE("F4 is a field") {
  FiniteRing f = FiniteRing::generate("F4");
  REQUIRE(f.one().has_value());
  for (FiniteRing::Index a = 0; a < 4; ++a) {
    if (a == f.zero()) continue;
    bool invertible = false;
    for (FiniteRing::Index b = 0; b < 4; ++b) invertible |= f.mul(a, b) == *f.one();
    CHECK(invertible);
    CHECK(f.add(a, a) == f.zero());
  }
}

TEST_CASE("table validation") {
  CHECK(z4_tables().size() == 4);
  CHECK(test::error_of([] { z4_tables(true); }) == ErrorCode::kMalformedInput);
  std::vector<FiniteRing::Index> add{0, 1, 1, 0}, mul{0, 0, 0, 1};
  CHECK(test::error_of([&] { FiniteRing::from_tables("bad-one", 2, add, mul, 0, 0); }) ==
        ErrorCode::kMalformedInput);
  CHECK(test::error_of([&] { FiniteRing::from_tables("short", 2, {0, 1}, mul, 0, 1); }) ==
        ErrorCode::kMalformedInput);
}

TEST_CASE("subset operations") {
  FiniteRing z6 = FiniteRing::generate("Z6");
  Subset two = single(z6, 2);
  CHECK(additive_closure(z6, two).count() == 3);
  CHECK(sumset(z6, two, two).count() == 1);
  CHECK(ideal_closure(z6, two, true).count() == 3);
  CHECK(ideal_closure(z6, single(z6, 0), true).count() == 1);
  CHECK(ideal_closure(z6, single(z6, 1), false).full());
  CHECK(is_nil(z6, single(z6, 0)));
  CHECK_FALSE(is_nil(z6, two));
  FiniteRing z4 = FiniteRing::generate("Z4");
  CHECK(is_nil(z4, single(z4, 2)));
  CHECK_FALSE(is_semiprime(z4));
  CHECK(is_semiprime(z6));
}

TEST_CASE("xi on small rings") {
  FiniteRing m2f2 = FiniteRing::generate("M2(F2)");
  XiResult a = xi_exact(m2f2, 8);
  CHECK(a.status == XiResult::Status::kValue);
  CHECK(a.value == 1);
  CHECK(a.commutator_count == 8);
  CHECK(a.pair_product_count == 16);

  XiResult b = xi_exact(FiniteRing::generate("M2(Z4)"), 8);
  CHECK(b.status == XiResult::Status::kValue);
  CHECK(b.value == 1);
  CHECK(b.commutator_count == 64);
  CHECK(b.pair_product_count == 256);

  CHECK(xi_exact(FiniteRing::generate("M2(Z3)"), 8).value == 1);

  XiResult u2 = xi_exact(FiniteRing::generate("U2(F2)"), 8);
  CHECK(u2.status == XiResult::Status::kNotGenerated);
  CHECK(u2.commutator_count == 2);
  CHECK(u2.pair_product_count == 1);
  XiResult u3 = xi_exact(FiniteRing::generate("U3(F2)"), 8);
  CHECK(u3.status == XiResult::Status::kNotGenerated);
  CHECK(u3.commutator_count == 8);
  CHECK(u3.pair_product_count == 2);

  CHECK(xi_exact(FiniteRing::generate("Z4"), 8).status == XiResult::Status::kNotGenerated);
  CHECK(xi_exact(FiniteRing::generate("0"), 8).status == XiResult::Status::kValue);
}

TEST_CASE("commutator conditions") {
  Section2Report z6 = check_section2(FiniteRing::generate("Z6"));
  CHECK(z6.commutative);
  CHECK(z6.commutators_central);
  CHECK(z6.commutes_with_squares);
  CHECK(z6.commutators_commute);
  CHECK(z6.semiprime);
  CHECK(z6.ok());

  Section2Report m2 = check_section2(FiniteRing::generate("M2(F2)"));
  CHECK_FALSE(m2.commutative);
  CHECK_FALSE(m2.commutators_central);
  CHECK_FALSE(m2.commutes_with_squares);
  CHECK_FALSE(m2.commutators_commute);
  CHECK(m2.semiprime);
  CHECK(m2.commutator_ideal_size == 16);
  CHECK(m2.ok());

  Section2Report u2 = check_section2(FiniteRing::generate("U2(F2)"));
  CHECK_FALSE(u2.commutative);
  CHECK_FALSE(u2.commutators_central);
  CHECK(u2.commutes_with_squares);
  CHECK(u2.commutators_commute);
  CHECK_FALSE(u2.semiprime);
  CHECK(u2.commutator_ideal_size == 2);
  CHECK(u2.commutator_ideal_nil);
  CHECK(u2.ok());

  Section2Report u3 = check_section2(FiniteRing::generate("U3(F2)"));
  CHECK_FALSE(u3.commutators_central);
  CHECK(u3.commutes_with_squares);
  CHECK_FALSE(u3.commutators_commute);
  CHECK(u3.commutator_ideal_size == 8);
  CHECK(u3.commutator_ideal_nil);
  CHECK(u3.ok());

  CHECK(check_section2(FiniteRing::generate("M2(Z4)")).ok());
}

TEST_CASE("abelian non-central Lie ideal in characteristic 2") {
  for (unsigned q : {2u, 4u}) {
    Example22Report r = example22_check(q);
    CHECK(r.field_size == q);
    CHECK(r.lie_ideal);
    CHECK(r.abelian);
    CHECK(r.not_central);
    CHECK(r.scalar_control_central);
  }
  CHECK(test::error_of([] { example22_check(3); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("radical power check") {
  RadicalPowerReport u2 = radical_power_check(FiniteRing::generate("U2(F2)"));
  CHECK(u2.ideal_size == 2);
  CHECK(u2.closure_size == 1);
  CHECK(u2.max_exponent == 2);
  RadicalPowerReport m2 = radical_power_check(FiniteRing::generate("M2(F2)"));
  CHECK(m2.ideal_size == 16);
  CHECK(m2.closure_size == 16);
  CHECK(m2.max_exponent == 1);
  std::size_t total = 0;
  for (const auto& [m, count] : m2.exponent_histogram) total += count;
  CHECK(total == 16);
}
