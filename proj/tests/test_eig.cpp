#include <doctest.h>

#include <cmath>
#include <numbers>

#include "skewexp/eig.hpp"
#include "skewexp/rng.hpp"
#include "skewexp/spectral_g.hpp"

using namespace skewexp;

namespace {

ComplexDense i_times_g(int n_qubits) {
    ComplexDense g = build_g(n_qubits, 0.0);
    return g.scaled(cdouble(0.0, 1.0));
}

ComplexDense random_hermitian(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    ComplexDense h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h.at(i, i) = rng.uniform(-1, 1);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cdouble v(rng.uniform(-1, 1), rng.uniform(-1, 1));
            h.at(i, j) = v;
            h.at(j, i) = std::conj(v);
        }
    }
    return h;
}

}  // namespace

TEST_CASE("already-diagonal input") {
    ComplexDense h(2);
    h.at(0, 0) = 3.0;
    h.at(1, 1) = 1.0;
    const HermitianEig e = hermitian_eig(h);
    CHECK(e.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(e.eigenvalues[1] == doctest::Approx(3.0));
    CHECK(std::abs(e.eigenvectors.at(1, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(e.eigenvectors.at(0, 1)) == doctest::Approx(1.0));
}

TEST_CASE("i G2 has eigenvalues -1, 1 with small residuals") {
    const ComplexDense h = i_times_g(1);
    const HermitianEig e = hermitian_eig(h);
    CHECK(e.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-13));
    for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t i = 0; i < 2; ++i) {
            cdouble r = -e.eigenvalues[k] * e.eigenvectors.at(i, k);
            for (std::size_t j = 0; j < 2; ++j) r += h.at(i, j) * e.eigenvectors.at(j, k);
            CHECK(std::abs(r) <= 1e-12);
        }
    }
}

TEST_CASE("i G4 eigenvalues are +-cot(pi/8), +-cot(3 pi/8)") {
    const HermitianEig e = hermitian_eig(i_times_g(2));
    const double c1 = 1.0 / std::tan(std::numbers::pi / 8.0);
    const double c3 = 1.0 / std::tan(3.0 * std::numbers::pi / 8.0);
    CHECK(e.eigenvalues[0] == doctest::Approx(-c1).epsilon(1e-12));
    CHECK(e.eigenvalues[1] == doctest::Approx(-c3).epsilon(1e-12));
    CHECK(e.eigenvalues[2] == doctest::Approx(c3).epsilon(1e-12));
    CHECK(e.eigenvalues[3] == doctest::Approx(c1).epsilon(1e-12));
}

TEST_CASE("eigendecomposition reconstructs the input") {
    for (std::uint64_t s = 0; s < 5; ++s) {
        const ComplexDense h = random_hermitian(8, s + 100);
        const HermitianEig e = hermitian_eig(h);
        ComplexDense recon = e.eigenvectors;
        std::vector<cdouble> d(8);
        for (std::size_t k = 0; k < 8; ++k) d[k] = e.eigenvalues[k];
        recon.scale_cols(d);
        recon = recon * e.eigenvectors.adjoint();
        CHECK(frobenius_distance(h, recon) <= 1e-10 * std::max(1.0, h.frobenius_norm()));
        CHECK(e.eigenvectors.unitarity_defect() <= 1e-12);
    }
}

TEST_CASE("non-Hermitian input is rejected") {
    ComplexDense h(2);
    h.at(0, 1) = 1.0;
    h.at(1, 0) = 0.5;
    CHECK_THROWS_AS(hermitian_eig(h), std::domain_error);
}
