#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "skewexp/eig.hpp"
#include "skewexp/expm.hpp"
#include "skewexp/spectral_g.hpp"

using namespace skewexp;

TEST_CASE("build_g produces the canonical pattern") {
    const ComplexDense g = build_g(2, 0.0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const double expect = i == j ? 0.0 : (i < j ? 1.0 : -1.0);
            CHECK(g.at(i, j) == cdouble(expect));
        }
    const ComplexDense g1 = build_g(1, 0.0);
    CHECK(g1.at(0, 1) == cdouble(1.0));
    CHECK(g1.at(1, 0) == cdouble(-1.0));
    const ComplexDense gs = build_g(1, 2.5);
    CHECK(gs.at(0, 0) == cdouble(2.5));
    CHECK(gs.at(1, 1) == cdouble(2.5));
}

TEST_CASE("build_g enforces the qubit range") {
    CHECK_THROWS_AS(build_g(0, 0.0), std::out_of_range);
    CHECK_THROWS_AS(build_g(8, 0.0), std::out_of_range);
}

TEST_CASE("g_spectrum at n=1 pairs +i with (1, i)/sqrt(2)") {
    const GSpectrum s = g_spectrum(1, 0.0);
    CHECK(s.eigenvalues[0].imag() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.eigenvalues[1].imag() == doctest::Approx(-1.0).epsilon(1e-15));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(s.eigenvector_matrix.at(0, 0) - cdouble(inv_sqrt2, 0)) <= 1e-15);
    CHECK(std::abs(s.eigenvector_matrix.at(1, 0) - cdouble(0, inv_sqrt2)) <= 1e-15);
    CHECK(std::abs(s.eigenvector_matrix.at(1, 1) - cdouble(0, -inv_sqrt2)) <= 1e-15);
}

TEST_CASE("g_spectrum at n=2 gives +-i cot(pi/8), +-i cot(3 pi/8)") {
    const GSpectrum s = g_spectrum(2, 0.0);
    const double c1 = 1.0 / std::tan(std::numbers::pi / 8.0);
    const double c3 = 1.0 / std::tan(3.0 * std::numbers::pi / 8.0);
    CHECK(s.eigenvalues[0].imag() == doctest::Approx(c1).epsilon(1e-14));
    CHECK(s.eigenvalues[1].imag() == doctest::Approx(c3).epsilon(1e-14));
    CHECK(s.eigenvalues[2].imag() == doctest::Approx(-c3).epsilon(1e-14));
    CHECK(s.eigenvalues[3].imag() == doctest::Approx(-c1).epsilon(1e-14));
}

TEST_CASE("a uniform diagonal shift moves every eigenvalue by g") {
    const GSpectrum s = g_spectrum(1, 3.0);
    CHECK(s.eigenvalues[0].real() == doctest::Approx(3.0));
    CHECK(s.eigenvalues[0].imag() == doctest::Approx(1.0));
    CHECK(s.eigenvalues[1].real() == doctest::Approx(3.0));
    CHECK(s.eigenvalues[1].imag() == doctest::Approx(-1.0));
}

TEST_CASE("verify_spectrum residuals across sizes and shifts") {
    CHECK(verify_spectrum(g_spectrum(1, 0.0)) <= 1e-14);
    CHECK(verify_spectrum(g_spectrum(5, 0.0)) <= 1e-10);
    CHECK(verify_spectrum(g_spectrum(2, 1.5)) <= 1e-12);
    for (int n = 1; n <= 6; ++n)
        for (double g : {0.0, 1.0, -1.0, 2.5})
            CHECK(verify_spectrum(g_spectrum(n, g)) <= 1e-10);
}

TEST_CASE("V is unitary and equals D*F") {
    for (int n = 1; n <= 6; ++n) {
        const GSpectrum s = g_spectrum(n, 0.0);
        CHECK(s.eigenvector_matrix.unitarity_defect() <= 1e-12);
        CHECK(frobenius_distance(s.eigenvector_matrix,
                                 s.phase_matrix * s.fourier_matrix) <= 1e-12);
    }
}

TEST_CASE("eigenvalues occur in conjugate pairs and sum to N g") {
    for (double g : {0.0, 2.5}) {
        const GSpectrum s = g_spectrum(3, g);
        cdouble sum = 0.0;
        for (std::size_t k = 0; k < s.dim; ++k) {
            sum += s.eigenvalues[k];
            CHECK(std::abs(s.eigenvalues[s.dim - 1 - k] - std::conj(s.eigenvalues[k])) <= 1e-12);
        }
        CHECK(std::abs(sum - cdouble(static_cast<double>(s.dim) * g)) <= 1e-10);
    }
}

TEST_CASE("closed-form eigenvalues agree with the Jacobi oracle on i G") {
    for (int n = 1; n <= 5; ++n) {
        const GSpectrum s = g_spectrum(n, 0.0);
        std::vector<double> closed(s.dim);
        // i G has eigenvalues -imag(lambda_k)
        for (std::size_t k = 0; k < s.dim; ++k) closed[k] = -s.eigenvalues[k].imag();
        std::sort(closed.begin(), closed.end());
        const HermitianEig e = hermitian_eig(build_g(n, 0.0).scaled(cdouble(0, 1)));
        for (std::size_t k = 0; k < s.dim; ++k)
            CHECK(std::abs(closed[k] - e.eigenvalues[k]) <= 1e-10);
    }
}

TEST_CASE("spectral reconstruction of e^G matches the Pade oracle") {
    for (int n = 1; n <= 6; ++n) {
        const GSpectrum s = g_spectrum(n, 0.0);
        ComplexDense recon = s.eigenvector_matrix;
        std::vector<cdouble> el(s.dim);
        for (std::size_t k = 0; k < s.dim; ++k) el[k] = std::exp(s.eigenvalues[k]);
        recon.scale_cols(el);
        recon = recon * s.eigenvector_matrix.adjoint();
        CHECK(frobenius_distance(recon, expm_pade(build_g(n, 0.0))) <= 1e-8);
    }
}
