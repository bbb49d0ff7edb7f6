#include "skewexp/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace skewexp {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t bit_mask(int n_qubits, int qubit) {
    // qubit 0 is the most significant bit of the basis-state index
    return std::size_t{1} << (n_qubits - 1 - qubit);
}

// M <- G M for a single-qubit gate G = [[g00, g01], [g10, g11]] on `qubit`,
// restricted to rows whose `control` bit is 1 when control >= 0.
void apply_gate(ComplexDense& m, int n_qubits, int qubit, int control,
                cdouble g00, cdouble g01, cdouble g10, cdouble g11) {
    const std::size_t dim = m.dim();
    const std::size_t tmask = bit_mask(n_qubits, qubit);
    const std::size_t cmask = control >= 0 ? bit_mask(n_qubits, control) : 0;
    for (std::size_t r = 0; r < dim; ++r) {
        if (r & tmask) continue;  // visit each pair once, from its 0-branch
        if (cmask && !(r & cmask)) continue;
        const std::size_t r1 = r | tmask;
        for (std::size_t c = 0; c < dim; ++c) {
            const cdouble a = m.at(r, c);
            const cdouble b = m.at(r1, c);
            m.at(r, c) = g00 * a + g01 * b;
            m.at(r1, c) = g10 * a + g11 * b;
        }
    }
}

void apply_ry(ComplexDense& m, int n_qubits, int qubit, int control, double phi) {
    const double c = std::cos(0.5 * phi);
    const double s = std::sin(0.5 * phi);
    apply_gate(m, n_qubits, qubit, control, c, -s, s, c);
}

void apply_hadamard(ComplexDense& m, int n_qubits, int qubit) {
    const double h = 1.0 / std::sqrt(2.0);
    apply_gate(m, n_qubits, qubit, -1, h, h, h, -h);
}

// symmetric in control/target
void apply_cphase(ComplexDense& m, int n_qubits, int q1, int q2, double theta) {
    const std::size_t dim = m.dim();
    const std::size_t mask = bit_mask(n_qubits, q1) | bit_mask(n_qubits, q2);
    const cdouble phase = std::polar(1.0, theta);
    for (std::size_t r = 0; r < dim; ++r) {
        if ((r & mask) != mask) continue;
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) *= phase;
    }
}

void apply_swap(ComplexDense& m, int n_qubits, int q1, int q2) {
    const std::size_t dim = m.dim();
    const std::size_t m1 = bit_mask(n_qubits, q1);
    const std::size_t m2 = bit_mask(n_qubits, q2);
    for (std::size_t r = 0; r < dim; ++r) {
        if ((r & m1) && !(r & m2)) {
            const std::size_t r2 = (r & ~m1) | m2;
            for (std::size_t c = 0; c < dim; ++c) std::swap(m.at(r, c), m.at(r2, c));
        }
    }
}

double clamped_cot(double t) {
    const double guard = std::cos(kLambdaSinGuard) / std::sin(kLambdaSinGuard);
    const double s = std::sin(t);
    const double c = std::cos(t);
    if (s == 0.0) return c > 0.0 ? guard : -guard;
    const double v = c / s;
    return std::clamp(v, -guard, guard);
}

}  // namespace

int p_count(int n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("p_count: n_qubits must be >= 1");
    return 2 * n_qubits + n_qubits / 2 + (n_qubits - 1) / 2;
}

int total_count(int n_qubits) {
    return p_count(n_qubits) + n_qubits + n_qubits * (n_qubits - 1) / 2 + n_qubits;
}

void ParamVector::validate() const {
    if (n_qubits < 1) throw std::invalid_argument("ParamVector: n_qubits must be >= 1");
    const std::size_t n = static_cast<std::size_t>(n_qubits);
    if (theta_p.size() != static_cast<std::size_t>(p_count(n_qubits)))
        throw std::invalid_argument("ParamVector: theta_p has wrong length");
    if (theta_d.size() != n)
        throw std::invalid_argument("ParamVector: theta_d has wrong length");
    if (theta_f.size() != n * (n - 1) / 2)
        throw std::invalid_argument("ParamVector: theta_f has wrong length");
    if (theta_lambda.size() != n)
        throw std::invalid_argument("ParamVector: theta_lambda has wrong length");
    for (std::size_t i = 0; i < theta_lambda.size(); ++i)
        if (std::abs(std::sin(theta_lambda[i])) < kLambdaSinGuard)
            throw std::domain_error("ParamVector: theta_lambda[" + std::to_string(i) +
                                    "] too close to a cotangent singularity");
}

std::vector<double> ParamVector::flatten() const {
    std::vector<double> out;
    out.reserve(theta_p.size() + theta_d.size() + theta_f.size() + theta_lambda.size());
    out.insert(out.end(), theta_p.begin(), theta_p.end());
    out.insert(out.end(), theta_d.begin(), theta_d.end());
    out.insert(out.end(), theta_f.begin(), theta_f.end());
    out.insert(out.end(), theta_lambda.begin(), theta_lambda.end());
    return out;
}

ParamVector ParamVector::unflatten(int n_qubits, const std::vector<double>& flat) {
    const std::size_t n = static_cast<std::size_t>(n_qubits);
    const std::size_t np = static_cast<std::size_t>(p_count(n_qubits));
    const std::size_t nf = n * (n - 1) / 2;
    if (flat.size() != np + n + nf + n)
        throw std::invalid_argument("ParamVector::unflatten: wrong flat length");
    ParamVector p;
    p.n_qubits = n_qubits;
    auto it = flat.begin();
    p.theta_p.assign(it, it + np); it += np;
    p.theta_d.assign(it, it + n); it += n;
    p.theta_f.assign(it, it + nf); it += nf;
    p.theta_lambda.assign(it, it + n);
    // keep lambda angles inside the singularity guard so optimizer line
    // searches never abort mid-run
    for (double& t : p.theta_lambda) {
        double r = std::fmod(t, kPi);
        if (r < 0.0) r += kPi;
        if (r < kLambdaSinGuard) t += kLambdaSinGuard - r;
        else if (r > kPi - kLambdaSinGuard) t -= r - (kPi - kLambdaSinGuard);
    }
    return p;
}

ComplexDense build_p_block(const std::vector<double>& theta_p, int n_qubits) {
    if (theta_p.size() != static_cast<std::size_t>(p_count(n_qubits)))
        throw std::invalid_argument("build_p_block: expected " +
                                    std::to_string(p_count(n_qubits)) + " parameters, got " +
                                    std::to_string(theta_p.size()));
    ComplexDense u = ComplexDense::identity(std::size_t{1} << n_qubits);
    std::size_t slot = 0;
    for (int q = 0; q < n_qubits; ++q) apply_ry(u, n_qubits, q, -1, theta_p[slot++]);
    for (int q = 0; q + 1 < n_qubits; q += 2) apply_ry(u, n_qubits, q + 1, q, theta_p[slot++]);
    for (int q = 0; q < n_qubits; ++q) apply_ry(u, n_qubits, q, -1, theta_p[slot++]);
    for (int q = 1; q + 1 < n_qubits; q += 2) apply_ry(u, n_qubits, q + 1, q, theta_p[slot++]);
    return u;
}

std::vector<cdouble> kron_rz_diag(const std::vector<double>& angles) {
    const int n = static_cast<int>(angles.size());
    const std::size_t dim = std::size_t{1} << n;
    std::vector<cdouble> d(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        double phase = 0.0;
        for (int b = 0; b < n; ++b) {
            const bool set = j & (std::size_t{1} << (n - 1 - b));
            phase += (set ? 0.5 : -0.5) * angles[b];
        }
        d[j] = std::polar(1.0, phase);
    }
    return d;
}

ComplexDense build_kron_rz(const std::vector<double>& angles) {
    const auto d = kron_rz_diag(angles);
    ComplexDense m(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) m.at(j, j) = d[j];
    return m;
}

ComplexDense build_d_block(const std::vector<double>& theta_d) {
    return build_kron_rz(theta_d);
}

std::vector<cdouble> lambda_block_diag(const std::vector<double>& theta_lambda) {
    std::vector<double> cots(theta_lambda.size());
    for (std::size_t i = 0; i < theta_lambda.size(); ++i) {
        if (std::abs(std::sin(theta_lambda[i])) < kLambdaSinGuard)
            throw std::domain_error("lambda block: theta_lambda[" + std::to_string(i) +
                                    "] violates the singularity guard");
        cots[i] = clamped_cot(theta_lambda[i]);
    }
    return kron_rz_diag(cots);
}

ComplexDense build_lambda_block(const std::vector<double>& theta_lambda) {
    const auto d = lambda_block_diag(theta_lambda);
    ComplexDense m(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) m.at(j, j) = d[j];
    return m;
}

std::vector<double> lambda_phases(const std::vector<double>& theta_lambda) {
    const int n = static_cast<int>(theta_lambda.size());
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> cots(theta_lambda.size());
    for (std::size_t i = 0; i < theta_lambda.size(); ++i) {
        if (std::abs(std::sin(theta_lambda[i])) < kLambdaSinGuard)
            throw std::domain_error("lambda block: theta_lambda[" + std::to_string(i) +
                                    "] violates the singularity guard");
        cots[i] = clamped_cot(theta_lambda[i]);
    }
    std::vector<double> psi(dim, 0.0);
    for (std::size_t j = 0; j < dim; ++j)
        for (int b = 0; b < n; ++b) {
            const bool set = j & (std::size_t{1} << (n - 1 - b));
            psi[j] += (set ? 0.5 : -0.5) * cots[b];
        }
    return psi;
}

std::vector<double> standard_qft_angles(int n_qubits) {
    std::vector<double> angles;
    for (int q = 0; q < n_qubits; ++q)
        for (int j = q + 1; j < n_qubits; ++j)
            angles.push_back(kPi / std::ldexp(1.0, j - q));
    return angles;
}

ComplexDense build_param_qft(const std::vector<double>& theta_f, int n_qubits) {
    const std::size_t expected = static_cast<std::size_t>(n_qubits) * (n_qubits - 1) / 2;
    if (theta_f.size() != expected)
        throw std::invalid_argument("build_param_qft: expected " + std::to_string(expected) +
                                    " parameters, got " + std::to_string(theta_f.size()));
    ComplexDense u = ComplexDense::identity(std::size_t{1} << n_qubits);
    std::size_t slot = 0;
    for (int q = 0; q < n_qubits; ++q) {
        apply_hadamard(u, n_qubits, q);
        for (int j = q + 1; j < n_qubits; ++j)
            apply_cphase(u, n_qubits, j, q, theta_f[slot++]);
    }
    for (int q = 0; q < n_qubits / 2; ++q) apply_swap(u, n_qubits, q, n_qubits - 1 - q);
    return u;
}

ComplexDense assemble_u(const ParamVector& params) {
    params.validate();
    const ComplexDense p = build_p_block(params.theta_p, params.n_qubits);
    const ComplexDense f = build_param_qft(params.theta_f, params.n_qubits);
    const auto d = kron_rz_diag(params.theta_d);
    const auto lam = lambda_block_diag(params.theta_lambda);

    ComplexDense m = p;          // P
    m.scale_rows(d);             // D P
    m = f * m;                   // F D P
    m.scale_rows(lam);           // Lambda F D P
    m = f.adjoint() * m;         // F^ Lambda F D P
    std::vector<cdouble> dconj(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) dconj[i] = std::conj(d[i]);
    m.scale_rows(dconj);         // D^ F^ Lambda F D P
    return p.adjoint() * m;      // P^ D^ F^ Lambda F D P
}

ComplexDense reconstruct_generator(const ParamVector& params) {
    params.validate();
    const ComplexDense p = build_p_block(params.theta_p, params.n_qubits);
    const ComplexDense f = build_param_qft(params.theta_f, params.n_qubits);
    const auto d = kron_rz_diag(params.theta_d);
    const auto psi = lambda_phases(params.theta_lambda);

    ComplexDense w = p;
    w.scale_rows(d);
    w = f * w;                   // W = F D P

    ComplexDense m = w;
    std::vector<cdouble> ipsi(psi.size());
    for (std::size_t j = 0; j < psi.size(); ++j) ipsi[j] = cdouble(0.0, psi[j]);
    m.scale_rows(ipsi);
    return w.adjoint() * m;      // W^ diag(i psi) W
}

ParamVector warm_start(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 7)
        throw std::out_of_range("warm_start: n_qubits must be in [1, 7]");
    const std::size_t dim = std::size_t{1} << n_qubits;
    const double nd = static_cast<double>(dim);

    ParamVector p;
    p.n_qubits = n_qubits;
    p.theta_p.assign(static_cast<std::size_t>(p_count(n_qubits)), 0.0);

    // D(theta_d) must equal diag(e^{-i j pi / N}) up to a global phase
    p.theta_d.resize(n_qubits);
    for (int b = 0; b < n_qubits; ++b)
        p.theta_d[b] = -kPi * std::ldexp(1.0, n_qubits - 1 - b) / nd;

    // F(theta_f) = conj(F) = F^ at negated standard angles
    p.theta_f = standard_qft_angles(n_qubits);
    for (double& a : p.theta_f) a = -a;

    // least-squares Kronecker fit of the eigenvalue phases; Walsh patterns
    // are orthogonal, so the normal equations decouple per bit
    p.theta_lambda.resize(n_qubits);
    for (int b = 0; b < n_qubits; ++b) {
        double acc = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            const double theta = (2.0 * static_cast<double>(k) + 1.0) * kPi / (2.0 * nd);
            const double target = std::cos(theta) / std::sin(theta);
            const bool set = k & (std::size_t{1} << (n_qubits - 1 - b));
            acc += (set ? 1.0 : -1.0) * target;
        }
        const double gate_angle = 2.0 * acc / nd;
        p.theta_lambda[b] = std::atan2(1.0, gate_angle);  // arccot, branch (0, pi)
    }
    return p;
}

}  // namespace skewexp
