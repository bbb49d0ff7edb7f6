#include "skewexp/spectral_g.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace skewexp {

namespace {
constexpr double kPi = std::numbers::pi;

void check_qubits(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 7)
        throw std::out_of_range("n_qubits must be in [1, 7], got " + std::to_string(n_qubits));
}
}  // namespace

ComplexDense build_g(int n_qubits, double diag_shift) {
    check_qubits(n_qubits);
    const std::size_t n = std::size_t{1} << n_qubits;
    ComplexDense g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.at(i, j) = (i == j) ? diag_shift : (i < j ? 1.0 : -1.0);
    return g;
}

GSpectrum g_spectrum(int n_qubits, double diag_shift) {
    check_qubits(n_qubits);
    const std::size_t n = std::size_t{1} << n_qubits;
    const double nd = static_cast<double>(n);

    GSpectrum s;
    s.dim = n;
    s.diag_shift = diag_shift;
    s.phase_matrix = ComplexDense(n);
    s.fourier_matrix = ComplexDense(n);
    s.eigenvalues.resize(n);

    for (std::size_t j = 0; j < n; ++j)
        s.phase_matrix.at(j, j) = std::polar(1.0, static_cast<double>(j) * kPi / nd);

    const double scale = 1.0 / std::sqrt(nd);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            s.fourier_matrix.at(j, k) =
                scale * std::polar(1.0, 2.0 * kPi * static_cast<double>(j * k) / nd);

    s.eigenvector_matrix = ComplexDense(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            s.eigenvector_matrix.at(j, k) = s.phase_matrix.at(j, j) * s.fourier_matrix.at(j, k);

    for (std::size_t k = 0; k < n; ++k) {
        const double theta = (2.0 * static_cast<double>(k) + 1.0) * kPi / (2.0 * nd);
        s.eigenvalues[k] = cdouble(diag_shift, std::cos(theta) / std::sin(theta));
    }
    return s;
}

double verify_spectrum(const GSpectrum& spec) {
    int n_qubits = 0;
    for (std::size_t d = spec.dim; d > 1; d >>= 1) ++n_qubits;
    ComplexDense g = build_g(n_qubits, spec.diag_shift);

    double worst = 0.0;
    const std::size_t n = spec.dim;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            cdouble acc = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                acc += g.at(i, j) * spec.eigenvector_matrix.at(j, k);
            acc -= spec.eigenvalues[k] * spec.eigenvector_matrix.at(i, k);
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

}  // namespace skewexp
