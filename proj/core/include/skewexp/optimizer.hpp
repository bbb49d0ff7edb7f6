#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "skewexp/circuit.hpp"
#include "skewexp/dense.hpp"

namespace skewexp {

struct OptConfig {
    int max_iters = 500;
    double grad_step = 1e-6;
    double loss_tol = 1e-9;          // absolute loss-change tolerance
    int max_restarts = 3;
    double success_threshold = 0.05;
    std::uint64_t seed = 0;
};

struct OptTrace {
    std::string run_id;
    std::vector<double> losses;  // per accepted iteration of the best run
    ParamVector final_params;
    int restarts_used = 0;
    bool converged = false;
    double wall_time = 0.0;  // seconds
};

using LossFn = std::function<double(const ParamVector&)>;

enum class UnitaryLossMode { FROBENIUS, FIDELITY };

/// ||target - reconstruct_generator(params)||_F, unnormalized.
double loss_antisym(const ParamVector& params, const AntisymMatrix& target);

/// FROBENIUS: ||target_u - U(theta)||_F.
/// FIDELITY: 1 - |trace(target_u^ U(theta))| / N.
/// Throws std::domain_error when target_u is not unitary within 1e-8.
double loss_unitary(const ParamVector& params, const ComplexDense& target_u,
                    UnitaryLossMode mode);

/// Central differences over the flattened parameter vector.
std::vector<double> finite_diff_grad(const LossFn& loss, const ParamVector& params,
                                     double step);

/// L-BFGS (memory 10) with backtracking line search over finite-difference
/// gradients. Restarts from fresh seeded random draws while the result
/// stays above cfg.success_threshold; keeps the best run. Deterministic
/// given cfg.seed.
OptTrace minimize(const LossFn& loss, const ParamVector& initial, const OptConfig& cfg);

/// The random initialization used by restarts: theta_p/d/f uniform in
/// [-pi, pi], theta_lambda uniform in [0.15, pi - 0.15].
ParamVector random_params(int n_qubits, std::uint64_t seed);

}  // namespace skewexp
