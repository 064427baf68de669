#pragma once

#include "detail/dense_poly.hpp"
#include "eqcube/hlpoly.hpp"

namespace eqcube::detail {

/// p = s^{shift} * dense(p) with dense(p)(0) != 0 (s = t^{1/2}).
struct ShiftedU {
  int shift = 0;
  UPoly poly;
};

ShiftedU to_dense(const HLPoly& p);
HLPoly from_dense(const UPoly& u, int shift);

}  // namespace eqcube::detail
