#include "ccert/ring_element.hpp"

#include "ccert/error.hpp"

namespace ccert {

namespace {

std::string matrix_ring_name(const Matrix& m) {
  return "M" + std::to_string(m.size()) + "(" + m.ring()->name() + ")";
}

[[noreturn]] void mismatch(const RingElement& a, const RingElement& b) {
  throw Error(ErrorCode::kRingMismatch,
              "ring element mismatch: " + a.ring_name() + " vs " + b.ring_name());
}

template <typename Op>
RingElement combine(const RingElement& a, const RingElement& b, Op op) {
  if (a.value().index() != b.value().index()) mismatch(a, b);
  return std::visit(
      [&](const auto& x) -> RingElement {
        using T = std::decay_t<decltype(x)>;
        return RingElement(op(x, std::get<T>(b.value())));
      },
      a.value());
}

}  // namespace

const Matrix& RingElement::matrix() const {
  if (const auto* m = std::get_if<Matrix>(&value_)) return *m;
  throw Error(ErrorCode::kRingMismatch, "expected a matrix element, got " + ring_name());
}

const DirectSum& RingElement::direct_sum() const {
  if (const auto* d = std::get_if<DirectSum>(&value_)) return *d;
  throw Error(ErrorCode::kRingMismatch, "expected a direct-sum element, got " + ring_name());
}

const Z23Element& RingElement::z23() const {
  if (const auto* z = std::get_if<Z23Element>(&value_)) return *z;
  throw Error(ErrorCode::kRingMismatch, "expected a Z23 element, got " + ring_name());
}

bool RingElement::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, value_);
}

RingElement RingElement::zero_like() const {
  if (const auto* m = std::get_if<Matrix>(&value_)) return Matrix::zero(m->ring(), m->size());
  if (const auto* d = std::get_if<DirectSum>(&value_)) return d->zero_like();
  return Z23Element::zero();
}

RingElement RingElement::one_like() const {
  if (const auto* m = std::get_if<Matrix>(&value_)) return Matrix::identity(m->ring(), m->size());
  if (const auto* d = std::get_if<DirectSum>(&value_)) return d->one_like();
  return Z23Element::one();
}

bool RingElement::same_ring(const RingElement& other) const {
  if (value_.index() != other.value_.index()) return false;
  if (const auto* m = std::get_if<Matrix>(&value_)) {
    const auto& o = std::get<Matrix>(other.value_);
    return m->ring() == o.ring() && m->size() == o.size();
  }
  if (const auto* d = std::get_if<DirectSum>(&value_)) {
    const auto& o = std::get<DirectSum>(other.value_);
    if (d->summands() != o.summands()) return false;
    for (std::size_t i = 0; i < d->summands(); ++i) {
      if (d->parts()[i].ring() != o.parts()[i].ring() ||
          d->parts()[i].size() != o.parts()[i].size()) {
        return false;
      }
    }
  }
  return true;
}

std::string RingElement::ring_name() const {
  if (const auto* m = std::get_if<Matrix>(&value_)) return matrix_ring_name(*m);
  if (const auto* d = std::get_if<DirectSum>(&value_)) {
    std::string out;
    for (const auto& p : d->parts()) out += (out.empty() ? "" : "+") + matrix_ring_name(p);
    return out;
  }
  return "Z23";
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}

RingElement operator-(const RingElement& a) {
  return std::visit([](const auto& x) { return RingElement(-x); }, a.value_);
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (!a.same_ring(b)) mismatch(a, b);
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return x == std::get<T>(b.value_);
      },
      a.value_);
}

RingElement commutator(const RingElement& p, const RingElement& q) { return p * q - q * p; }

RingElement direct_sum_embed(std::vector<Matrix> parts) { return DirectSum(std::move(parts)); }

}  // namespace ccert
