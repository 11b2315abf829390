#pragma once

#include <vector>

#include "ccert/matrix.hpp"

namespace ccert {

/// Element of M_{n1}(S1) (+) ... (+) M_{nk}(Sk); every operation acts
/// coordinatewise.
class DirectSum {
 public:
  /// Throws kEmptySum for an empty list.
  explicit DirectSum(std::vector<Matrix> parts);

  const std::vector<Matrix>& parts() const noexcept { return parts_; }
  std::size_t summands() const noexcept { return parts_.size(); }

  bool is_zero() const;
  DirectSum zero_like() const;
  DirectSum one_like() const;

  friend DirectSum operator+(const DirectSum& a, const DirectSum& b);
  friend DirectSum operator-(const DirectSum& a, const DirectSum& b);
  friend DirectSum operator-(const DirectSum& a);
  friend DirectSum operator*(const DirectSum& a, const DirectSum& b);
  friend bool operator==(const DirectSum& a, const DirectSum& b);

 private:
  std::vector<Matrix> parts_;
};

}  // namespace ccert
