#pragma once

#include <vector>

#include "skewexp/dense.hpp"

namespace skewexp {

/// Closed-form eigendecomposition of the canonical uniform antisymmetric
/// matrix G: V = D * F with D_jj = e^{i j pi / N}, F the forward DFT matrix
/// (omega = e^{+i 2 pi / N}, 1/sqrt(N) on every entry), and eigenvalue
/// lambda_k = diag_shift + i cot((2k+1) pi / (2N)) paired with column k.
struct GSpectrum {
    std::size_t dim = 0;
    double diag_shift = 0.0;
    std::vector<cdouble> eigenvalues;  // column order k = 0..N-1, unsorted
    ComplexDense phase_matrix;         // D
    ComplexDense fourier_matrix;       // F
    ComplexDense eigenvector_matrix;   // V = D * F
};

/// 2^n x 2^n matrix with diag_shift on the diagonal, +1 strictly above,
/// -1 strictly below. Throws std::out_of_range unless 1 <= n_qubits <= 7.
ComplexDense build_g(int n_qubits, double diag_shift);

GSpectrum g_spectrum(int n_qubits, double diag_shift);

/// max over k of ||G v_k - lambda_k v_k||_inf, with G rebuilt from the
/// spectrum's own dimension and shift.
double verify_spectrum(const GSpectrum& spec);

}  // namespace skewexp
