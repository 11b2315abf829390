#pragma once

#include <doctest.h>

#include "ccert/error.hpp"
#include "ccert/matrix.hpp"

namespace test {

inline ccert::RingRef zz() { return ccert::Ring::integers(); }
inline ccert::RingRef qq() { return ccert::Ring::rationals(); }

inline ccert::Matrix ints(ccert::RingRef r, std::initializer_list<std::initializer_list<long>> rows) {
  return ccert::Matrix::from_integers(r, rows);
}

template <typename F>
ccert::ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const ccert::Error& e) {
    return e.code();
  }
  FAIL("expected a ccert::Error");
  return ccert::ErrorCode::kInvalidArgument;
}

}  // namespace test
