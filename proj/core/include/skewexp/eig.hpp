#pragma once

#include <vector>

#include "skewexp/dense.hpp"

namespace skewexp {

struct HermitianEig {
    std::vector<double> eigenvalues;  // ascending
    ComplexDense eigenvectors;        // columns are eigenvectors
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. Sweeps until the
/// off-diagonal Frobenius norm drops below 1e-13 * ||h||_F, at most 100
/// sweeps. Throws std::domain_error for non-Hermitian input (tolerance
/// 1e-12 * max(1, ||h||_F)) and std::runtime_error on non-convergence.
HermitianEig hermitian_eig(const ComplexDense& h);

}  // namespace skewexp
