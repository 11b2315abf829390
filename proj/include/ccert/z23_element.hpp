#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>

#include "ccert/matrix.hpp"

namespace ccert {

/// Element of the dimension-drop algebra Z_{2,3}, modelled as a polynomial in
/// T = t^(1/16) and S = (1-t)^(1/16) with exact 6x6 rational coefficients
/// (M2 (x) M3, Kronecker layout) modulo S^16 = 1 - T^16.
///
/// Canonical form: every stored monomial has S-exponent < 16 and a nonzero
/// coefficient, so equality of canonical forms is equality of functions on
/// [0,1] (the curve T^16 + S^16 = 1 is irreducible).
class Z23Element {
 public:
  /// Exponents count in units of 1/16.
  static constexpr int kRootDegree = 16;
  static constexpr std::size_t kDim = 6;

  using Exponents = std::pair<int, int>;  // (T-exponent, S-exponent)

  static Z23Element zero() { return Z23Element(); }
  static Z23Element one();
  /// Constant function with the given 6x6 rational value.
  static Z23Element constant(const Matrix& value);
  /// T^t_exp S^s_exp * coefficient; reduces S-exponents >= 16.
  static Z23Element monomial(int t_exp, int s_exp, const Matrix& coefficient);

  const std::map<Exponents, Matrix>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend Z23Element operator+(const Z23Element& a, const Z23Element& b);
  friend Z23Element operator-(const Z23Element& a, const Z23Element& b);
  friend Z23Element operator-(const Z23Element& a);
  friend Z23Element operator*(const Z23Element& a, const Z23Element& b);
  friend bool operator==(const Z23Element& a, const Z23Element& b) { return a.terms_ == b.terms_; }

 private:
  void accumulate(int t_exp, int s_exp, const Matrix& coefficient);

  std::map<Exponents, Matrix> terms_;
};

Z23Element commutator(const Z23Element& p, const Z23Element& q);

/// 1_2 (x) m for m in M3(Q), and m (x) 1_3 for m in M2(Q).
Matrix embed_right(const Matrix& m3);
Matrix embed_left(const Matrix& m2);

/// Exact values at t = 0 (T = 0, S = 1) and t = 1 (T = 1, S = 0).
Matrix z23_value_at_zero(const Z23Element& x);
Matrix z23_value_at_one(const Z23Element& x);

struct BoundaryReport {
  bool admissible = true;
  /// 0 or 1 when a violation was found.
  std::optional<int> end;
  std::optional<Matrix> value;
};

/// f(0) must lie in M2 (x) 1 and f(1) in 1 (x) M3.
BoundaryReport z23_boundary_check(const Z23Element& x);

using NumericMatrix6 = std::array<double, 36>;

/// Double-precision evaluation at t in [0,1]; throws kOutOfDomain otherwise.
NumericMatrix6 z23_eval(const Z23Element& x, double t);

}  // namespace ccert
