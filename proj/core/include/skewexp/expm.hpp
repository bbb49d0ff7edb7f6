#pragma once

#include "skewexp/dense.hpp"

namespace skewexp {

/// Matrix exponential by scaling-and-squaring with a degree-13 diagonal
/// Pade approximant. The input is scaled until its 1-norm is <= 0.5 and
/// the result squared back. Throws std::invalid_argument on non-finite
/// input and std::runtime_error on overflow during squaring.
ComplexDense expm_pade(const ComplexDense& m);

/// Solve A X = B by LU with partial pivoting (A is consumed by value).
ComplexDense lu_solve(ComplexDense a, const ComplexDense& b);

}  // namespace skewexp
