#include "ccert/matrix.hpp"

#include <string>
#include <unordered_map>

#include "ccert/error.hpp"

namespace ccert {

namespace {

void require_compatible(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring()) {
    throw Error(ErrorCode::kRingMismatch,
                "matrix ring mismatch: " + a.ring()->name() + " vs " + b.ring()->name());
  }
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kShapeMismatch, "matrix size mismatch: " + std::to_string(a.size()) +
                                               " vs " + std::to_string(b.size()));
  }
}

Matrix minor_of(const Matrix& a, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t n = a.size();
  std::vector<Scalar> entries;
  entries.reserve((n - 1) * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != skip_col) entries.push_back(a(i, j));
    }
  }
  return Matrix(a.ring(), n - 1, std::move(entries));
}

// Exact division in an integral domain; the caller guarantees divisibility.
Scalar exact_quotient(const Scalar& num, const Scalar& den) {
  RingRef r = num.ring();
  switch (r->kind()) {
    case RingKind::kIntegers: {
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), num.integer().get_mpz_t(), den.integer().get_mpz_t());
      return Scalar::from_integer(r, q);
    }
    case RingKind::kPolynomial: {
      const auto& d = den.coefficients();
      std::vector<Scalar> rem = num.coefficients();
      if (rem.size() < d.size()) {
        if (rem.empty()) return Scalar::zero(r);
        throw Error(ErrorCode::kInvalidArgument, "inexact polynomial division");
      }
      std::vector<Scalar> quot(rem.size() - d.size() + 1, Scalar::zero(r->base()));
      for (std::size_t k = quot.size(); k-- > 0;) {
        const Scalar& lead = rem[k + d.size() - 1];
        if (lead.is_zero()) continue;
        Scalar c = exact_quotient(lead, d.back());
        quot[k] = c;
        for (std::size_t t = 0; t < d.size(); ++t) rem[k + t] -= c * d[t];
      }
      for (const auto& x : rem) {
        if (!x.is_zero()) throw Error(ErrorCode::kInvalidArgument, "inexact polynomial division");
      }
      return Scalar::polynomial(r, std::move(quot));
    }
    default: {
      auto inv = den.try_invert();
      if (!inv) throw Error(ErrorCode::kInvalidArgument, "division by a non-unit");
      return num * *inv;
    }
  }
}

// Fraction-free Gaussian elimination; every division is exact.
Scalar bareiss(Matrix m) {
  const std::size_t n = m.size();
  RingRef r = m.ring();
  Scalar prev = Scalar::one(r);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k).is_zero()) ++swap;
      if (swap == n) return Scalar::zero(r);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Scalar num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = exact_quotient(num, prev);
      }
      m(i, k) = Scalar::zero(r);
    }
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace

Matrix::Matrix(RingRef ring, std::size_t n, std::vector<Scalar> entries)
    : ring_(ring), n_(n), entries_(std::move(entries)) {
  if (n_ == 0) throw Error(ErrorCode::kShapeMismatch, "matrix size must be >= 1");
  if (entries_.size() != n_ * n_) {
    throw Error(ErrorCode::kShapeMismatch, "expected " + std::to_string(n_ * n_) + " entries");
  }
  for (const auto& e : entries_) {
    if (e.ring() != ring_) throw Error(ErrorCode::kRingMismatch, "matrix entry outside matrix ring");
  }
}

Matrix Matrix::zero(RingRef ring, std::size_t n) {
  return Matrix(ring, n, std::vector<Scalar>(n * n, Scalar::zero(ring)));
}

Matrix Matrix::identity(RingRef ring, std::size_t n) {
  Matrix m = zero(ring, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(ring);
  return m;
}

Matrix Matrix::unit(RingRef ring, std::size_t n, std::size_t row, std::size_t col) {
  Matrix m = zero(ring, n);
  m(row, col) = Scalar::one(ring);
  return m;
}

Matrix Matrix::from_integers(RingRef ring,
                             std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t n = rows.size();
  std::vector<Scalar> entries;
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorCode::kShapeMismatch, "matrix literal is not square");
    for (long v : row) entries.push_back(Scalar::from_integer(ring, v));
  }
  return Matrix(ring, n, std::move(entries));
}

Matrix Matrix::diagonal(const std::vector<Scalar>& entries) {
  if (entries.empty()) throw Error(ErrorCode::kShapeMismatch, "empty diagonal");
  Matrix m = zero(entries.front().ring(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_compatible(a, b);
  std::vector<Scalar> out;
  out.reserve(a.entries_.size());
  for (std::size_t i = 0; i < a.entries_.size(); ++i) out.push_back(a.entries_[i] + b.entries_[i]);
  return Matrix(a.ring_, a.n_, std::move(out));
}

Matrix operator-(const Matrix& a) {
  std::vector<Scalar> out;
  out.reserve(a.entries_.size());
  for (const auto& e : a.entries_) out.push_back(-e);
  return Matrix(a.ring_, a.n_, std::move(out));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_compatible(a, b);
  std::vector<Scalar> out;
  out.reserve(a.entries_.size());
  for (std::size_t i = 0; i < a.entries_.size(); ++i) out.push_back(a.entries_[i] - b.entries_[i]);
  return Matrix(a.ring_, a.n_, std::move(out));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_compatible(a, b);
  const std::size_t n = a.n_;
  Matrix out = Matrix::zero(a.ring_, n);
  // Most operands in the decompositions are 0/1 shift or unit matrices;
  // skipping zeros keeps those products near O(n^2).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& lhs = a(i, k);
      if (lhs.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& rhs = b(k, j);
        if (rhs.is_zero()) continue;
        out(i, j) += lhs * rhs;
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  if (s.ring() != a.ring_) throw Error(ErrorCode::kRingMismatch, "scalar outside matrix ring");
  std::vector<Scalar> out;
  out.reserve(a.entries_.size());
  for (const auto& e : a.entries_) out.push_back(s * e);
  return Matrix(a.ring_, a.n_, std::move(out));
}

Matrix operator*(const Matrix& a, const Scalar& s) {
  if (s.ring() != a.ring_) throw Error(ErrorCode::kRingMismatch, "scalar outside matrix ring");
  std::vector<Scalar> out;
  out.reserve(a.entries_.size());
  for (const auto& e : a.entries_) out.push_back(e * s);
  return Matrix(a.ring_, a.n_, std::move(out));
}

bool operator==(const Matrix& a, const Matrix& b) {
  require_compatible(a, b);
  return a.entries_ == b.entries_;
}

Matrix commutator(const Matrix& p, const Matrix& q) { return p * q - q * p; }

Scalar determinant(const Matrix& a) {
  RingRef r = a.ring();
  if (!r->is_commutative()) {
    throw Error(ErrorCode::kNoncommutativeCoefficients,
                "determinant over noncommutative coefficients (" + r->name() + ")");
  }
  const std::size_t n = a.size();
  if (n == 1) return a(0, 0);
  if (r->is_integral_domain()) return bareiss(a);
  if (n > 20) throw Error(ErrorCode::kInvalidArgument, "Laplace determinant limited to n <= 20");

  // Expand along rows; memo[mask] = det of the bottom rows restricted to the
  // columns in mask (popcount(mask) rows from the bottom).
  std::unordered_map<std::uint32_t, Scalar> memo;
  auto rec = [&](auto&& self, std::size_t row, std::uint32_t mask) -> Scalar {
    if (row == n) return Scalar::one(r);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Scalar acc = Scalar::zero(r);
    bool negative = false;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      const Scalar& entry = a(row, col);
      if (!entry.is_zero()) {
        Scalar term = entry * self(self, row + 1, mask & ~(1u << col));
        acc = negative ? acc - term : acc + term;
      }
      negative = !negative;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, 0, (1u << n) - 1u);
}

std::optional<Matrix> adjugate_inverse(const Matrix& a) {
  Scalar det = determinant(a);
  auto det_inv = det.try_invert();
  if (!det_inv) return std::nullopt;
  RingRef r = a.ring();
  const std::size_t n = a.size();
  if (n == 1) return Matrix(r, 1, {*det_inv});
  Matrix out = Matrix::zero(r, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar cofactor = determinant(minor_of(a, j, i));
      if ((i + j) % 2 == 1) cofactor = -cofactor;
      out(i, j) = *det_inv * cofactor;
    }
  }
  return out;
}

Matrix reversal_conjugate(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix out = Matrix::zero(a.ring(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(n - 1 - i, n - 1 - j);
  }
  return out;
}

Matrix change_ring(const Matrix& integral, RingRef ring) {
  if (integral.ring() == ring) return integral;
  if (integral.ring() != Ring::integers()) {
    throw Error(ErrorCode::kRingMismatch, "change_ring expects an integer matrix");
  }
  std::vector<Scalar> out;
  out.reserve(integral.entries().size());
  for (const auto& e : integral.entries()) out.push_back(Scalar::from_integer(ring, e.integer()));
  return Matrix(ring, integral.size(), std::move(out));
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw Error(ErrorCode::kEmptySum, "no blocks");
  RingRef r = blocks.front().ring();
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (b.ring() != r) throw Error(ErrorCode::kRingMismatch, "blocks over different rings");
    n += b.size();
  }
  Matrix out = Matrix::zero(r, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) out(offset + i, offset + j) = b(i, j);
    }
    offset += b.size();
  }
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring()) throw Error(ErrorCode::kRingMismatch, "kronecker ring mismatch");
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  Matrix out = Matrix::zero(a.ring(), na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace ccert
