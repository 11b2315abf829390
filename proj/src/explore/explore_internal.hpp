#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccert/explore.hpp"

namespace ccert {

/// Small ring of coefficients (Z<m> or a Galois field) by tables.
struct CoefficientRing {
  std::string name;
  unsigned size = 0;
  std::vector<std::uint8_t> add, mul;
  std::vector<std::string> labels;

  std::uint8_t plus(std::uint8_t a, std::uint8_t b) const { return add[a * size + b]; }
  std::uint8_t times(std::uint8_t a, std::uint8_t b) const { return mul[a * size + b]; }
};

CoefficientRing coefficient_ring(const std::string& spec);

/// Matrices over a coefficient ring restricted to a cell pattern; elements
/// are indexed by their cell entries read as base-k digits.
class MatrixTableRing {
 public:
  enum class Shape { kFull, kUpper, kStrictUpper };

  MatrixTableRing(CoefficientRing coefficients, std::size_t n, Shape shape);

  std::size_t size() const noexcept { return size_; }
  const CoefficientRing& coefficients() const noexcept { return k_; }
  std::vector<std::uint8_t> decode(std::size_t index) const;
  std::size_t encode(const std::vector<std::uint8_t>& entries) const;
  FiniteRing build(const std::string& name, bool has_one) const;

 private:
  CoefficientRing k_;
  std::size_t n_;
  std::vector<std::size_t> cells_;
  std::size_t size_ = 1;
};

}  // namespace ccert
