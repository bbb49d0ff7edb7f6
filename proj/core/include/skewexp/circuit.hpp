#pragma once

#include <vector>

#include "skewexp/dense.hpp"

namespace skewexp {

/// Full parameter set for the layered circuit
/// U(theta) = P^ D^ F^ Lambda F D P, partitioned per block. theta_lambda
/// entries are raw angles; the Lambda block feeds cot(theta) into its
/// rotation-Z gates.
struct ParamVector {
    int n_qubits = 0;
    std::vector<double> theta_p;       // p_count(n) entries, radians
    std::vector<double> theta_d;       // n entries, radians
    std::vector<double> theta_f;       // n(n-1)/2 entries, radians
    std::vector<double> theta_lambda;  // n entries, |sin| >= 1e-6 each

    void validate() const;  // throws std::invalid_argument on layout/guard violations

    std::vector<double> flatten() const;
    static ParamVector unflatten(int n_qubits, const std::vector<double>& flat);
};

/// Minimum |sin(theta_lambda)| allowed; cot values are clamped to the
/// magnitude this bound implies.
inline constexpr double kLambdaSinGuard = 1e-6;

/// Gate count of the P block: two single-RY layers plus two brick-wall
/// CRY layers on pairs (0,1),(2,3),... and (1,2),(3,4),...
int p_count(int n_qubits);

/// p_count(n) + n + n(n-1)/2 + n.
int total_count(int n_qubits);

ComplexDense build_p_block(const std::vector<double>& theta_p, int n_qubits);

/// RZ(angles[0]) (x) ... (x) RZ(angles[n-1]), with RZ(phi) =
/// diag(e^{-i phi/2}, e^{+i phi/2}) and angles[0] on the most significant
/// bit of the row index. Returned as the diagonal only.
std::vector<cdouble> kron_rz_diag(const std::vector<double>& angles);

ComplexDense build_kron_rz(const std::vector<double>& angles);
ComplexDense build_d_block(const std::vector<double>& theta_d);

/// Kron-RZ at angles cot(theta); throws std::domain_error naming the
/// offending index when the singularity guard is violated.
ComplexDense build_lambda_block(const std::vector<double>& theta_lambda);
std::vector<cdouble> lambda_block_diag(const std::vector<double>& theta_lambda);

/// Standard QFT circuit with parameterized phase angles and the trailing
/// bit-reversal swap network. At standard angles pi/2^d it equals the DFT
/// matrix F exactly.
ComplexDense build_param_qft(const std::vector<double>& theta_f, int n_qubits);

/// The pi/2^d angles that make build_param_qft the exact DFT matrix.
std::vector<double> standard_qft_angles(int n_qubits);

/// P^ D^ F^ Lambda F D P (daggered blocks reuse the same parameters).
ComplexDense assemble_u(const ParamVector& params);

/// The circuit's exact logarithm branch: W^ diag(i psi_j) W with
/// W = F D P and psi_j the analytic per-bit phase sum of the Lambda
/// diagonal.
ComplexDense reconstruct_generator(const ParamVector& params);

/// Analytic diagonal phases psi_j = sum_b s_b(j) cot(theta_b) / 2.
std::vector<double> lambda_phases(const std::vector<double>& theta_lambda);

/// Parameters reproducing e^G exactly for n <= 2 and as a least-squares
/// Kronecker fit of the eigenvalue phases for larger n.
ParamVector warm_start(int n_qubits);

}  // namespace skewexp
