#include <algorithm>
#include <cmath>
#include <random>

#include "ccert/error.hpp"
#include "ccert/rewrite.hpp"
#include "ccert/witness.hpp"
#include "ccert/z23.hpp"

namespace ccert {

namespace {

RingRef qq() { return Ring::rationals(); }

using Numeric = NumericMatrix6;

Numeric mul(const Numeric& a, const Numeric& b) {
  Numeric out{};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t k = 0; k < 6; ++k)
      for (std::size_t j = 0; j < 6; ++j) out[i * 6 + j] += a[i * 6 + k] * b[k * 6 + j];
  return out;
}

Numeric sub(const Numeric& a, const Numeric& b) {
  Numeric out{};
  for (std::size_t i = 0; i < 36; ++i) out[i] = a[i] - b[i];
  return out;
}

Numeric add(const Numeric& a, const Numeric& b) {
  Numeric out{};
  for (std::size_t i = 0; i < 36; ++i) out[i] = a[i] + b[i];
  return out;
}

Numeric bracket(const Numeric& a, const Numeric& b) { return sub(mul(a, b), mul(b, a)); }

/// Witness element T^e (1 (x) m) or S^e (m (x) 1), split as [T^(e/2) p, T^(e/2) q].
CommutatorWitness split(bool left_variable, int exponent, const CommutatorWitness& w) {
  auto lift = [&](const RingElement& m) {
    Matrix c = change_ring(m.matrix(), qq());
    Matrix coefficient = left_variable ? embed_right(c) : embed_left(c);
    const int half = exponent / 2;
    return RingElement(left_variable ? Z23Element::monomial(half, 0, coefficient)
                                     : Z23Element::monomial(0, half, coefficient));
  };
  return CommutatorWitness::of(lift(w.p), lift(w.q));
}

}  // namespace

SumUnitWitness Z23Witness::as_sum() const {
  const RingElement one(Z23Element::one());
  return {{UnitWitnessSummand{a, q, r, s, one}, UnitWitnessSummand{b, x, y, z, one}}};
}

Z23Witness z23_witness() {
  const WitnessTriple three = witness_triple(3);
  const WitnessTriple two = witness_triple(2);
  Z23Witness w{
      Z23Element::monomial(8, 0, embed_right(change_ring(three.s, qq()))),
      split(true, 4, three.u),
      split(true, 2, three.v),
      split(true, 2, three.w),
      Z23Element::monomial(0, 8, embed_left(change_ring(two.s, qq()))),
      split(false, 4, two.u),
      split(false, 2, two.v),
      split(false, 2, two.w),
  };
  return w;
}

Z23UnitReport z23_verify_unit(int grid_points) {
  if (grid_points < 2) throw Error(ErrorCode::kInvalidArgument, "grid needs at least two points");
  const Z23Witness w = z23_witness();
  const Matrix id = Matrix::identity(qq(), Z23Element::kDim);
  const RingElement h(Z23Element::monomial(Z23Element::kRootDegree, 0, id));
  const RingElement one_minus_h(Z23Element::monomial(0, Z23Element::kRootDegree, id));
  const RingElement first = w.a * commutator(w.q.value, w.r.value * w.s.value);
  const RingElement second = w.b * commutator(w.x.value, w.y.value * w.z.value);

  Z23UnitReport report;
  report.first_half = first == h;
  report.second_half = second == one_minus_h;
  report.sum_is_one = first + second == RingElement(Z23Element::one());
  report.witnesses_recompute = true;
  report.all_admissible = true;
  for (const CommutatorWitness* c : {&w.q, &w.r, &w.s, &w.x, &w.y, &w.z}) {
    report.witnesses_recompute = report.witnesses_recompute && c->recomputes();
    for (const RingElement* e : {&c->p, &c->q, &c->value}) {
      report.all_admissible = report.all_admissible && z23_boundary_check(e->z23()).admissible;
    }
  }
  for (const RingElement* e : {&w.a, &w.b}) {
    report.all_admissible = report.all_admissible && z23_boundary_check(e->z23()).admissible;
  }

  report.grid_points = grid_points;
  Numeric identity{};
  for (std::size_t i = 0; i < 6; ++i) identity[i * 7] = 1.0;
  for (int k = 0; k < grid_points; ++k) {
    const double t = static_cast<double>(k) / (grid_points - 1);
    auto ev = [&](const RingElement& e) { return z23_eval(e.z23(), t); };
    const Numeric lhs =
        add(mul(ev(w.a), bracket(ev(w.q.value), mul(ev(w.r.value), ev(w.s.value)))),
            mul(ev(w.b), bracket(ev(w.x.value), mul(ev(w.y.value), ev(w.z.value)))));
    const Numeric diff = sub(lhs, identity);
    for (double d : diff) report.max_residual = std::max(report.max_residual, std::abs(d));
  }
  return report;
}

Certificate z23_xi6(const Z23Element& a, TermPolicy policy) {
  const BoundaryReport boundary = z23_boundary_check(a);
  if (!boundary.admissible) {
    throw Error(ErrorCode::kInadmissibleInput,
                "element violates the boundary condition at t = " + std::to_string(*boundary.end));
  }
  const Z23Witness w = z23_witness();
  const RingElement target(a);
  Certificate c{target, {}, "z23.xi6"};
  for (const auto& t : lemma33_core(target * w.a, w.q, w.r, w.s)) c.terms.emplace_back(t);
  for (const auto& t : lemma33_core(target * w.b, w.x, w.y, w.z)) c.terms.emplace_back(t);
  return policy == TermPolicy::kDropZero ? normalized(std::move(c)) : c;
}

double z23_max_abs_on_grid(const Z23Element& x, int grid_points) {
  if (grid_points < 2) throw Error(ErrorCode::kInvalidArgument, "grid needs at least two points");
  double out = 0.0;
  for (int k = 0; k < grid_points; ++k) {
    const Numeric v = z23_eval(x, static_cast<double>(k) / (grid_points - 1));
    for (double d : v) out = std::max(out, std::abs(d));
  }
  return out;
}

Z23Element z23_random_admissible(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> exponent(1, Z23Element::kRootDegree - 1);
  auto random_matrix = [&](std::size_t n) {
    std::vector<Scalar> e;
    for (std::size_t i = 0; i < n * n; ++i) e.push_back(Scalar::from_integer(qq(), entry(rng)));
    return Matrix(qq(), n, std::move(e));
  };
  // endpoint parts vanish at the opposite end; the interior part vanishes at both
  Z23Element out = Z23Element::monomial(0, exponent(rng), embed_left(random_matrix(2)));
  out = out + Z23Element::monomial(exponent(rng), 0, embed_right(random_matrix(3)));
  out = out + Z23Element::monomial(exponent(rng), exponent(rng), random_matrix(6));
  return out;
}

}  // namespace ccert
