#include "ccert/direct_sum.hpp"

#include "ccert/error.hpp"

namespace ccert {

namespace {

void require_same_shape(const DirectSum& a, const DirectSum& b) {
  if (a.summands() != b.summands()) {
    throw Error(ErrorCode::kRingMismatch, "direct sums with different numbers of summands");
  }
}

template <typename Op>
DirectSum zip(const DirectSum& a, const DirectSum& b, Op op) {
  require_same_shape(a, b);
  std::vector<Matrix> out;
  out.reserve(a.summands());
  for (std::size_t i = 0; i < a.summands(); ++i) out.push_back(op(a.parts()[i], b.parts()[i]));
  return DirectSum(std::move(out));
}

}  // namespace

DirectSum::DirectSum(std::vector<Matrix> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorCode::kEmptySum, "direct sum needs at least one summand");
}

bool DirectSum::is_zero() const {
  for (const auto& p : parts_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

DirectSum DirectSum::zero_like() const {
  std::vector<Matrix> out;
  for (const auto& p : parts_) out.push_back(Matrix::zero(p.ring(), p.size()));
  return DirectSum(std::move(out));
}

DirectSum DirectSum::one_like() const {
  std::vector<Matrix> out;
  for (const auto& p : parts_) out.push_back(Matrix::identity(p.ring(), p.size()));
  return DirectSum(std::move(out));
}

DirectSum operator+(const DirectSum& a, const DirectSum& b) {
  return zip(a, b, [](const Matrix& x, const Matrix& y) { return x + y; });
}

DirectSum operator-(const DirectSum& a, const DirectSum& b) {
  return zip(a, b, [](const Matrix& x, const Matrix& y) { return x - y; });
}

DirectSum operator-(const DirectSum& a) {
  std::vector<Matrix> out;
  for (const auto& p : a.parts_) out.push_back(-p);
  return DirectSum(std::move(out));
}

DirectSum operator*(const DirectSum& a, const DirectSum& b) {
  return zip(a, b, [](const Matrix& x, const Matrix& y) { return x * y; });
}

bool operator==(const DirectSum& a, const DirectSum& b) {
  require_same_shape(a, b);
  for (std::size_t i = 0; i < a.summands(); ++i) {
    if (!(a.parts_[i] == b.parts_[i])) return false;
  }
  return true;
}

}  // namespace ccert
