#include "ccert/random.hpp"
#include "ccert/rewrite.hpp"
#include "ccert/witness.hpp"
#include "helpers.hpp"

using namespace ccert;
using test::ints;
using test::zz;

namespace {

RingElement sum_of(const std::vector<RingElement>& values, const RingElement& zero) {
  RingElement out = zero;
  for (const auto& v : values) out = out + v;
  return out;
}

}  // namespace

TEST_CASE("lemma31 expansion sums to a[x,y]b") {
  RandomElements source(1, {100, 100, 2});
  for (int i = 0; i < 50; ++i) {
    RingElement a = source.matrix(test::qq(), 3), x = source.matrix(test::qq(), 3);
    RingElement y = source.matrix(test::qq(), 3), b = source.matrix(test::qq(), 3);
    auto terms = lemma31_expand(a, x, y, b);
    CHECK(sum_of({terms[0].value(), terms[1].value(), terms[2].value()}, a.zero_like()) ==
          a * commutator(x, y) * b);
  }
  RingElement x = ints(zz(), {{1, 2}, {3, 4}});
  auto same = lemma31_expand(x, x, x, x);
  for (const auto& t : same) CHECK(t.value().is_zero());
  RingElement a = ints(zz(), {{0, 1}, {5, 2}}), y = ints(zz(), {{1, 1}, {0, 1}});
  auto unit = lemma31_expand(a, x, y, a.one_like());
  CHECK(unit[0].value() + unit[1].value() + unit[2].value() == a * commutator(x, y));
}

TEST_CASE("lemma32 split") {
  RandomElements source(2);
  RingRef z6 = Ring::integers_mod(6);
  for (int i = 0; i < 50; ++i) {
    RingElement a = source.matrix(z6, 3), x = source.matrix(z6, 3), y = source.matrix(z6, 3);
    auto [single, scaled] = lemma32_split(a, x, y);
    CHECK(single.w.value + scaled.value() == a * commutator(x, y));
  }
  RingElement x = ints(zz(), {{1, 2}, {3, 4}}), y = ints(zz(), {{0, 1}, {1, 1}});
  auto [single, scaled] = lemma32_split(x.one_like(), x, y);
  CHECK(single.w.value == commutator(x, y));
  CHECK(scaled.value().is_zero());
  RingElement d1 = ints(zz(), {{1, 0}, {0, 2}}), d2 = ints(zz(), {{3, 0}, {0, 5}});
  auto [s2, t2] = lemma32_split(x, d1, d2);
  CHECK((s2.w.value + t2.value()).is_zero());
  CHECK_FALSE(s2.w.value.is_zero());
}

TEST_CASE("lemma33 core") {
  RingElement p = Matrix::unit(zz(), 2, 0, 1), q1 = Matrix::unit(zz(), 2, 1, 0);
  CommutatorWitness wp = CommutatorWitness::of(Matrix::unit(zz(), 2, 0, 1), Matrix::unit(zz(), 2, 1, 1));
  CommutatorWitness wq1 = CommutatorWitness::of(Matrix::unit(zz(), 2, 1, 0), Matrix::unit(zz(), 2, 0, 0));
  CommutatorWitness wq2 = CommutatorWitness::of(Matrix::unit(zz(), 2, 0, 1), Matrix::unit(zz(), 2, 1, 0));
  CHECK(wp.value == p);
  CHECK(wq1.value == q1);
  RingElement one = Matrix::identity(zz(), 2);
  auto terms = lemma33_core(one, wp, wq1, wq2);
  CHECK(term_value(terms[0]) + term_value(terms[1]) + term_value(terms[2]) ==
        commutator(wp.value, wq1.value * wq2.value));
  for (const auto& t : lemma33_core(one.zero_like(), wp, wq1, wq2)) CHECK(term_value(t).is_zero());

  CommutatorWitness fake = wq1;
  fake.value = one;
  CHECK(test::error_of([&] { lemma33_core(one, wp, fake, wq2); }) == ErrorCode::kNotACommutator);

  RandomElements source(3);
  RingRef f5 = Ring::prime_field(5);
  SingleUnitWitness w = matrix_unit_witness(3, f5);
  for (int i = 0; i < 30; ++i) {
    RingElement c = source.matrix(f5, 3);
    auto t = lemma33_core(c, w.u, w.v, w.w);
    Certificate frag{c * commutator(w.u.value, w.v.value * w.w.value), {t.begin(), t.end()}, "fragment"};
    CHECK(verify(frag).valid);
  }
}

TEST_CASE("xi3 examples") {
  SingleUnitWitness w = subring_witness({2, 3});
  RingElement unit = w.s.one_like();
  Certificate c = xi3_decompose(unit, w);
  CHECK(pair_count(c) == 3);
  CHECK(verify(c).valid);
  CHECK(xi3_decompose(unit.zero_like(), w).terms.empty());
  CHECK(xi3_decompose(unit.zero_like(), w, TermPolicy::kKeepAll).terms.size() == 3);

  SingleUnitWitness w5 = matrix_unit_witness(5, test::qq());
  RandomElements source(4);
  for (int i = 0; i < 100; ++i) {
    RingElement a = source.matrix(test::qq(), 5);
    Certificate r = xi3_decompose(a, w5);
    CHECK(pair_count(r) <= 3);
    CHECK(r.target == a);
    CHECK(verify(r).valid);
  }
  SingleUnitWitness broken = w5;
  broken.s = broken.s + broken.s;
  CHECK(test::error_of([&] { xi3_decompose(RingElement(Matrix::identity(test::qq(), 5)), broken); }) ==
        ErrorCode::kInvalidWitness);
}

TEST_CASE("xi3 commutes with coordinate projections") {
  SingleUnitWitness w = subring_witness({2, 3});
  RandomElements source(5, {100, 1, 0});
  DirectSum a = source.direct_sum(zz(), {2, 3});
  Certificate whole = xi3_decompose(a, w, TermPolicy::kKeepAll);
  Certificate first = xi3_decompose(RingElement(a.parts()[0]), matrix_unit_witness(2, zz()), TermPolicy::kKeepAll);
  for (std::size_t t = 0; t < 3; ++t) {
    CHECK(term_value(whole.terms[t]).direct_sum().parts()[0] == term_value(first.terms[t]).matrix());
  }
}

TEST_CASE("mixed decomposition") {
  SingleUnitWitness w2 = matrix_unit_witness(2, zz());
  RingElement one = Matrix::identity(zz(), 2);
  Certificate c = mixed_decompose(one, w2);
  CHECK(verify(c).valid);
  CHECK(single_count(c) <= 1);
  CHECK(pair_count(c) <= 1);
  CHECK(mixed_decompose(one.zero_like(), w2).terms.empty());
  RingRef z6 = Ring::integers_mod(6);
  SingleUnitWitness w3 = matrix_unit_witness(3, z6);
  RandomElements source(6);
  for (int i = 0; i < 50; ++i) {
    Certificate r = mixed_decompose(source.matrix(z6, 3), w3);
    CHECK(verify(r).valid);
    CHECK(r.terms.size() <= 2);
  }
}

TEST_CASE("pipeline 12d") {
  SingleUnitWitness w3 = matrix_unit_witness(3, test::qq());
  SumUnitWitness d1 = as_sum(w3);
  RandomElements source(7, {1000, 1000, 0});
  for (int i = 0; i < 20; ++i) {
    RingElement a = source.matrix(test::qq(), 3);
    Certificate c = pipeline_12d(a, d1);
    CHECK(pair_count(c) <= 12);
    CHECK(verify(c).valid);
  }
  CHECK(pipeline_12d(RingElement(Matrix::zero(test::qq(), 3)), d1).terms.empty());
  Certificate raw = pipeline_12d(RingElement(Matrix::identity(test::qq(), 3)), d1, TermPolicy::kKeepAll);
  CHECK(raw.terms.size() == 12);
  CHECK(verify(raw).valid);
  SumUnitWitness d2 = coordinate_sum_witness({2, 3});
  for (int i = 0; i < 10; ++i) {
    Certificate c = pipeline_12d(source.direct_sum(zz(), {2, 3}), d2);
    CHECK(pair_count(c) <= 24);
    CHECK(verify(c).valid);
  }
  SumUnitWitness broken = d2;
  broken.summands.pop_back();
  CHECK(test::error_of([&] { pipeline_12d(RingElement(source.direct_sum(zz(), {2, 3})), broken); }) ==
        ErrorCode::kInvalidWitness);
}

TEST_CASE("bound calculator") {
  auto best = [](const std::string& s) {
    unsigned long long b = ~0ULL;
    for (const auto& r : xi_upper_bound(s)) b = std::min(b, r.bound);
    return b;
  };
  auto rules = xi_upper_bound("M3(S)");
  CHECK(rules.front().bound == 2);
  CHECK(rules.front().constructive);
  CHECK(best("M2(Z)+M3(Z)") == 2);
  CHECK(best("contains(M2(S)+M3(S))") == 3);
  CHECK(best("contains(xi=2)") == 120);
  CHECK(best("contains(xi=1)") == 15);
  CHECK(best("H") == 2);
  CHECK(best("Z23") == 6);
  CHECK(best("contains(Z23)") == 6);
  CHECK(best("contains(H)") == 120);
  auto cubic = xi_upper_bound("contains(xi=2)");
  CHECK_FALSE(cubic.front().constructive);
  for (const char* bad : {"Z", "M1(Z)", "foo", "contains(Q)", "contains(xi=0)"}) {
    CAPTURE(bad);
    CHECK(test::error_of([&] { xi_upper_bound(bad); }) == ErrorCode::kUnknownStructure);
  }
}
