#include "ccert/z23_element.hpp"

#include <cmath>

#include "ccert/error.hpp"

namespace ccert {

namespace {

RingRef q() { return Ring::rationals(); }

void require_coefficient(const Matrix& m) {
  if (m.ring() != Ring::rationals() || m.size() != Z23Element::kDim) {
    throw Error(ErrorCode::kShapeMismatch, "Z23 coefficients are 6x6 rational matrices");
  }
}

bool is_scalar_block(const Matrix& m, std::size_t bi, std::size_t bj, const Scalar& diag) {
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      const Scalar& e = m(bi * 3 + a, bj * 3 + b);
      if (a == b ? !(e == diag) : !e.is_zero()) return false;
    }
  }
  return true;
}

bool in_left_factor(const Matrix& m) {
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (!is_scalar_block(m, i, j, m(i * 3, j * 3))) return false;
  return true;
}

bool in_right_factor(const Matrix& m) {
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      if (!m(a, 3 + b).is_zero() || !m(3 + a, b).is_zero()) return false;
      if (!(m(a, b) == m(3 + a, 3 + b))) return false;
    }
  }
  return true;
}

}  // namespace

void Z23Element::accumulate(int t_exp, int s_exp, const Matrix& coefficient) {
  if (coefficient.is_zero()) return;
  if (t_exp < 0 || s_exp < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
  if (s_exp >= kRootDegree) {
    // S^16 = 1 - T^16
    accumulate(t_exp, s_exp - kRootDegree, coefficient);
    accumulate(t_exp + kRootDegree, s_exp - kRootDegree, -coefficient);
    return;
  }
  auto key = Exponents{t_exp, s_exp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coefficient);
    return;
  }
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

Z23Element Z23Element::one() { return constant(Matrix::identity(q(), kDim)); }

Z23Element Z23Element::constant(const Matrix& value) { return monomial(0, 0, value); }

Z23Element Z23Element::monomial(int t_exp, int s_exp, const Matrix& coefficient) {
  require_coefficient(coefficient);
  Z23Element out;
  out.accumulate(t_exp, s_exp, coefficient);
  return out;
}

Z23Element operator+(const Z23Element& a, const Z23Element& b) {
  Z23Element out = a;
  for (const auto& [e, m] : b.terms_) out.accumulate(e.first, e.second, m);
  return out;
}

Z23Element operator-(const Z23Element& a) {
  Z23Element out;
  for (const auto& [e, m] : a.terms_) out.terms_.emplace(e, -m);
  return out;
}

Z23Element operator-(const Z23Element& a, const Z23Element& b) { return a + (-b); }

Z23Element operator*(const Z23Element& a, const Z23Element& b) {
  Z23Element out;
  for (const auto& [ea, ma] : a.terms_) {
    for (const auto& [eb, mb] : b.terms_) {
      out.accumulate(ea.first + eb.first, ea.second + eb.second, ma * mb);
    }
  }
  return out;
}

Z23Element commutator(const Z23Element& p, const Z23Element& q) { return p * q - q * p; }

Matrix embed_right(const Matrix& m3) {
  if (m3.size() != 3 || m3.ring() != q()) throw Error(ErrorCode::kShapeMismatch, "expected M3(Q)");
  return kronecker(Matrix::identity(q(), 2), m3);
}

Matrix embed_left(const Matrix& m2) {
  if (m2.size() != 2 || m2.ring() != q()) throw Error(ErrorCode::kShapeMismatch, "expected M2(Q)");
  return kronecker(m2, Matrix::identity(q(), 3));
}

Matrix z23_value_at_zero(const Z23Element& x) {
  Matrix out = Matrix::zero(q(), Z23Element::kDim);
  for (const auto& [e, m] : x.terms()) {
    if (e.first == 0) out += m;
  }
  return out;
}

Matrix z23_value_at_one(const Z23Element& x) {
  Matrix out = Matrix::zero(q(), Z23Element::kDim);
  for (const auto& [e, m] : x.terms()) {
    if (e.second == 0) out += m;
  }
  return out;
}

BoundaryReport z23_boundary_check(const Z23Element& x) {
  Matrix at_zero = z23_value_at_zero(x);
  if (!in_left_factor(at_zero)) return {false, 0, at_zero};
  Matrix at_one = z23_value_at_one(x);
  if (!in_right_factor(at_one)) return {false, 1, at_one};
  return {};
}

NumericMatrix6 z23_eval(const Z23Element& x, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::kOutOfDomain, "t must lie in [0,1]");
  const double root_t = std::pow(t, 1.0 / Z23Element::kRootDegree);
  const double root_s = std::pow(1.0 - t, 1.0 / Z23Element::kRootDegree);
  NumericMatrix6 out{};
  for (const auto& [e, m] : x.terms()) {
    double weight = std::pow(root_t, e.first) * std::pow(root_s, e.second);
    if (weight == 0.0) continue;
    for (std::size_t i = 0; i < 36; ++i) {
      const auto& entry = m.entries()[i];
      if (!entry.is_zero()) out[i] += weight * entry.rational().get_d();
    }
  }
  return out;
}

}  // namespace ccert
