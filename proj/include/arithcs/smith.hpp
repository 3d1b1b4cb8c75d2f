#pragma once

#include <vector>

#include "arithcs/matrix.hpp"

namespace arithcs {

/// u * m * v == d with d diagonal, d[i] | d[i+1], d[i] >= 0, zeros last, and
/// u, v unimodular over Z. Throws an Overflow computation error if an
/// intermediate entry leaves the 64-bit range.
struct SmithForm {
  IntMatrix u, d, v;
};
SmithForm smith_normal_form(const IntMatrix& m);

/// The same decomposition over Z/n: diagonal entries are divisors of n (0
/// standing for the zero ideal) in divisibility order, and u, v are
/// invertible over Z/n. `v_inverse` is maintained alongside v because the
/// cohomology code needs both directions of the change of basis.
struct SmithFormZn {
  MatrixZn u, d, v, v_inverse;
};
SmithFormZn smith_normal_form(const MatrixZn& m);

}  // namespace arithcs
