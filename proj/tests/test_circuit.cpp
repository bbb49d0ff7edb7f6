#include <doctest.h>

#include <cmath>
#include <numbers>

#include "skewexp/circuit.hpp"
#include "skewexp/expm.hpp"
#include "skewexp/optimizer.hpp"
#include "skewexp/spectral_g.hpp"

using namespace skewexp;

namespace {
constexpr double kPi = std::numbers::pi;

AntisymMatrix g_target(int n_qubits) {
    const ComplexDense gm = build_g(n_qubits, 0.0);
    AntisymMatrix g(gm.dim());
    for (std::size_t k = 0; k < g.entries.size(); ++k) g.entries[k] = gm.data()[k].real();
    return g;
}
}  // namespace

TEST_CASE("gate counts") {
    CHECK(p_count(6) == 17);
    CHECK(p_count(3) == 8);
    CHECK(p_count(1) == 2);
    CHECK(total_count(3) == 17);
    CHECK(total_count(2) == 10);
    CHECK(total_count(1) == 4);
}

TEST_CASE("P block: zero angles give the identity") {
    const ComplexDense u = build_p_block(std::vector<double>(p_count(3), 0.0), 3);
    CHECK(frobenius_distance(u, ComplexDense::identity(8)) <= 1e-15);
}

TEST_CASE("P block: single qubit, [pi, 0]") {
    const ComplexDense u = build_p_block({kPi, 0.0}, 1);
    CHECK(std::abs(u.at(0, 0)) <= 1e-15);
    CHECK(std::abs(u.at(0, 1) - cdouble(-1.0)) <= 1e-15);
    CHECK(std::abs(u.at(1, 0) - cdouble(1.0)) <= 1e-15);
    CHECK(std::abs(u.at(1, 1)) <= 1e-15);
}

TEST_CASE("P block is real orthogonal for random angles") {
    for (std::uint64_t s = 0; s < 5; ++s) {
        const ParamVector p = random_params(3, s + 7);
        const ComplexDense u = build_p_block(p.theta_p, 3);
        CHECK(u.max_abs_imag() == 0.0);
        CHECK(u.unitarity_defect() <= 1e-12);
    }
}

TEST_CASE("P block rejects a wrong parameter count") {
    CHECK_THROWS_AS(build_p_block({0.0}, 2), std::invalid_argument);
}

TEST_CASE("kron RZ diagonals") {
    const double phi = 0.8;
    const ComplexDense r1 = build_kron_rz({phi});
    CHECK(std::abs(r1.at(0, 0) - std::polar(1.0, -phi / 2)) <= 1e-15);
    CHECK(std::abs(r1.at(1, 1) - std::polar(1.0, phi / 2)) <= 1e-15);

    CHECK(frobenius_distance(build_kron_rz({0.0, 0.0}), ComplexDense::identity(4)) == 0.0);

    const double a = 0.3, b = 1.1;
    const ComplexDense r2 = build_kron_rz({a, b});
    const double expected[] = {-(a + b) / 2, (-a + b) / 2, (a - b) / 2, (a + b) / 2};
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(std::abs(r2.at(j, j) - std::polar(1.0, expected[j])) <= 1e-15);
}

TEST_CASE("lambda block feeds cotangents into the rotations") {
    CHECK(frobenius_distance(build_lambda_block({kPi / 2}), ComplexDense::identity(2)) <= 1e-15);

    const ComplexDense l1 = build_lambda_block({kPi / 4});  // cot = 1
    CHECK(std::abs(l1.at(0, 0) - std::polar(1.0, -0.5)) <= 1e-15);
    CHECK(std::abs(l1.at(1, 1) - std::polar(1.0, 0.5)) <= 1e-15);

    // cot values (1, -1) -> diagonal phases (0, -1, 1, 0)
    const ComplexDense l2 = build_lambda_block({kPi / 4, 3 * kPi / 4});
    const double expected[] = {0.0, -1.0, 1.0, 0.0};
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(std::abs(l2.at(j, j) - std::polar(1.0, expected[j])) <= 1e-14);
}

TEST_CASE("lambda block singularity guard names the offending index") {
    CHECK_THROWS_WITH_AS(build_lambda_block({kPi / 2, 1e-9}),
                         doctest::Contains("theta_lambda[1]"), std::domain_error);
}

TEST_CASE("parameterized QFT at standard angles equals the DFT matrix") {
    // n = 1: Hadamard is the 2-point DFT
    CHECK(frobenius_distance(build_param_qft({}, 1), g_spectrum(1, 0.0).fourier_matrix) <= 1e-15);

    for (int n = 2; n <= 4; ++n) {
        const ComplexDense f = build_param_qft(standard_qft_angles(n), n);
        CHECK(frobenius_distance(f, g_spectrum(n, 0.0).fourier_matrix) <= 1e-12);
    }
}

TEST_CASE("negated QFT angles conjugate the DFT matrix") {
    std::vector<double> angles = standard_qft_angles(2);
    for (double& a : angles) a = -a;
    const ComplexDense f = build_param_qft(angles, 2);
    const ComplexDense f4 = g_spectrum(2, 0.0).fourier_matrix;
    CHECK(frobenius_distance(f, f4.conjugate()) <= 1e-12);
    CHECK(frobenius_distance(f, f4.adjoint()) <= 1e-12);  // DFT is symmetric
}

TEST_CASE("assemble_u at block-identity parameters is the identity") {
    ParamVector p;
    p.n_qubits = 2;
    p.theta_p.assign(p_count(2), 0.0);
    p.theta_d.assign(2, 0.0);
    p.theta_f.assign(1, 0.0);
    p.theta_lambda.assign(2, kPi / 2);
    CHECK(frobenius_distance(assemble_u(p), ComplexDense::identity(4)) <= 1e-12);
    CHECK(reconstruct_generator(p).frobenius_norm() <= 1e-12);
}

TEST_CASE("assemble_u is unitary for random parameters") {
    for (std::uint64_t s = 0; s < 10; ++s)
        CHECK(assemble_u(random_params(3, s)).unitarity_defect() <= 1e-12);
}

TEST_CASE("reconstructed generator is traceless anti-Hermitian and exponentiates to U") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const ParamVector p = random_params(2, s + 55);
        const ComplexDense gen = reconstruct_generator(p);
        CHECK((gen + gen.adjoint()).frobenius_norm() <= 1e-12);
        cdouble tr = 0.0;
        for (std::size_t i = 0; i < gen.dim(); ++i) tr += gen.at(i, i);
        CHECK(std::abs(tr) <= 1e-12);
        CHECK(frobenius_distance(expm_pade(gen), assemble_u(p)) <= 1e-9);
    }
}

TEST_CASE("warm start is exact for one and two qubits") {
    CHECK(loss_antisym(warm_start(1), g_target(1)) <= 1e-10);
    CHECK(loss_antisym(warm_start(2), g_target(2)) <= 1e-6);
    CHECK(frobenius_distance(assemble_u(warm_start(2)), expm_pade(build_g(2, 0.0))) <= 1e-6);
    CHECK(frobenius_distance(reconstruct_generator(warm_start(2)),
                             build_g(2, 0.0)) <= 1e-6);
}

TEST_CASE("warm start at n=3 beats the median random initialization") {
    const AntisymMatrix g8 = g_target(3);
    const double warm = loss_antisym(warm_start(3), g8);
    CHECK(warm > 0.0);
    std::vector<double> random_losses;
    for (std::uint64_t s = 0; s < 20; ++s)
        random_losses.push_back(loss_antisym(random_params(3, s + 1), g8));
    std::sort(random_losses.begin(), random_losses.end());
    const double median = 0.5 * (random_losses[9] + random_losses[10]);
    CHECK(warm <= median);
}

TEST_CASE("diagonal scaling equals full matrix multiplication bit for bit") {
    const ParamVector p = random_params(2, 99);
    ComplexDense fast = build_p_block(p.theta_p, 2);
    fast.scale_rows(kron_rz_diag(p.theta_d));
    const ComplexDense slow = build_d_block(p.theta_d) * build_p_block(p.theta_p, 2);
    for (std::size_t k = 0; k < fast.data().size(); ++k) {
        CHECK(fast.data()[k].real() == slow.data()[k].real());
        CHECK(fast.data()[k].imag() == slow.data()[k].imag());
    }
}

TEST_CASE("flatten and unflatten round trip") {
    const ParamVector p = random_params(3, 5);
    const ParamVector q = ParamVector::unflatten(3, p.flatten());
    CHECK(q.theta_p == p.theta_p);
    CHECK(q.theta_d == p.theta_d);
    CHECK(q.theta_f == p.theta_f);
    CHECK(q.theta_lambda == p.theta_lambda);
}

TEST_CASE("unflatten clamps lambda angles away from singularities") {
    ParamVector p = random_params(1, 3);
    std::vector<double> flat = p.flatten();
    flat.back() = 1e-9;  // nearly singular
    const ParamVector q = ParamVector::unflatten(1, flat);
    CHECK(std::abs(std::sin(q.theta_lambda[0])) >= kLambdaSinGuard * (1 - 1e-9));
}
