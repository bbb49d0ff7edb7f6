#include "skewexp/optimizer.hpp"

#include <chrono>
#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>

#include "skewexp/rng.hpp"

namespace skewexp {

namespace {

constexpr double kPi = std::numbers::pi;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

std::string describe_point(const std::vector<double>& x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(x[i]);
    }
    return s + "]";
}

struct RunResult {
    std::vector<double> losses;
    std::vector<double> final_x;
    bool tol_converged = false;
};

// One L-BFGS descent from x0; records the loss of every accepted iterate.
RunResult lbfgs_run(const std::function<double(const std::vector<double>&)>& f,
                    std::vector<double> x, const OptConfig& cfg) {
    constexpr std::size_t kMemory = 10;
    RunResult res;

    auto eval = [&](const std::vector<double>& pt) {
        const double v = f(pt);
        if (std::isnan(v))
            throw std::runtime_error("minimize: loss returned NaN at " + describe_point(pt));
        return v;
    };

    const std::size_t dim = x.size();
    double fx = eval(x);
    res.losses.push_back(fx);

    auto grad_at = [&](const std::vector<double>& pt) {
        std::vector<double> g(dim);
        std::vector<double> probe = pt;
        for (std::size_t i = 0; i < dim; ++i) {
            const double orig = probe[i];
            probe[i] = orig + cfg.grad_step;
            const double fp = eval(probe);
            probe[i] = orig - cfg.grad_step;
            const double fm = eval(probe);
            probe[i] = orig;
            g[i] = (fp - fm) / (2.0 * cfg.grad_step);
        }
        return g;
    };

    std::vector<double> g = grad_at(x);
    std::deque<std::vector<double>> s_hist, y_hist;
    std::deque<double> rho_hist;

    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        if (norm2(g) < 1e-12) { res.tol_converged = true; break; }

        // two-loop recursion
        std::vector<double> q = g;
        std::vector<double> alpha(s_hist.size());
        for (std::size_t i = s_hist.size(); i-- > 0;) {
            alpha[i] = rho_hist[i] * dot(s_hist[i], q);
            for (std::size_t k = 0; k < dim; ++k) q[k] -= alpha[i] * y_hist[i][k];
        }
        if (!s_hist.empty()) {
            const double gamma = dot(s_hist.back(), y_hist.back()) /
                                 dot(y_hist.back(), y_hist.back());
            for (double& v : q) v *= gamma;
        }
        for (std::size_t i = 0; i < s_hist.size(); ++i) {
            const double beta = rho_hist[i] * dot(y_hist[i], q);
            for (std::size_t k = 0; k < dim; ++k) q[k] += (alpha[i] - beta) * s_hist[i][k];
        }
        std::vector<double> dir = q;  // descent direction is -dir
        double gd = dot(g, dir);
        if (gd <= 0.0) {              // fall back to steepest descent
            dir = g;
            gd = dot(g, g);
        }

        // backtracking Armijo line search
        double step = 1.0;
        std::vector<double> xn(dim);
        double fn = fx;
        bool accepted = false;
        for (int bt = 0; bt < 40; ++bt) {
            for (std::size_t k = 0; k < dim; ++k) xn[k] = x[k] - step * dir[k];
            fn = eval(xn);
            if (fn <= fx - 1e-4 * step * gd) { accepted = true; break; }
            step *= 0.5;
        }
        if (!accepted) { res.tol_converged = true; break; }

        std::vector<double> gn = grad_at(xn);
        std::vector<double> s_vec(dim), y_vec(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            s_vec[k] = xn[k] - x[k];
            y_vec[k] = gn[k] - g[k];
        }
        const double sy = dot(s_vec, y_vec);
        if (sy > 1e-12) {
            s_hist.push_back(std::move(s_vec));
            y_hist.push_back(std::move(y_vec));
            rho_hist.push_back(1.0 / sy);
            if (s_hist.size() > kMemory) {
                s_hist.pop_front();
                y_hist.pop_front();
                rho_hist.pop_front();
            }
        }

        const double drop = fx - fn;
        x = std::move(xn);
        g = std::move(gn);
        fx = fn;
        res.losses.push_back(fx);
        if (drop < cfg.loss_tol) { res.tol_converged = true; break; }
    }

    res.final_x = std::move(x);
    return res;
}

}  // namespace

double loss_antisym(const ParamVector& params, const AntisymMatrix& target) {
    const std::size_t expect = std::size_t{1} << params.n_qubits;
    if (target.dim != expect)
        throw std::invalid_argument("loss_antisym: dimension mismatch");
    return frobenius_distance(target.to_complex(), reconstruct_generator(params));
}

double loss_unitary(const ParamVector& params, const ComplexDense& target_u,
                    UnitaryLossMode mode) {
    const std::size_t expect = std::size_t{1} << params.n_qubits;
    if (target_u.dim() != expect)
        throw std::invalid_argument("loss_unitary: dimension mismatch");
    if (target_u.unitarity_defect() > 1e-8)
        throw std::domain_error("loss_unitary: target is not unitary within 1e-8");
    const ComplexDense u = assemble_u(params);
    if (mode == UnitaryLossMode::FROBENIUS) return frobenius_distance(target_u, u);
    const ComplexDense prod = target_u.adjoint() * u;
    cdouble tr = 0.0;
    for (std::size_t i = 0; i < prod.dim(); ++i) tr += prod.at(i, i);
    return 1.0 - std::abs(tr) / static_cast<double>(prod.dim());
}

std::vector<double> finite_diff_grad(const LossFn& loss, const ParamVector& params,
                                     double step) {
    if (step <= 0.0) throw std::invalid_argument("finite_diff_grad: step must be positive");
    std::vector<double> x = params.flatten();
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double orig = x[i];
        x[i] = orig + step;
        const double fp = loss(ParamVector::unflatten(params.n_qubits, x));
        x[i] = orig - step;
        const double fm = loss(ParamVector::unflatten(params.n_qubits, x));
        x[i] = orig;
        g[i] = (fp - fm) / (2.0 * step);
    }
    return g;
}

ParamVector random_params(int n_qubits, std::uint64_t seed) {
    SplitMix64 rng(seed);
    ParamVector p;
    p.n_qubits = n_qubits;
    p.theta_p.resize(p_count(n_qubits));
    p.theta_d.resize(n_qubits);
    p.theta_f.resize(static_cast<std::size_t>(n_qubits) * (n_qubits - 1) / 2);
    p.theta_lambda.resize(n_qubits);
    for (double& v : p.theta_p) v = rng.uniform(-kPi, kPi);
    for (double& v : p.theta_d) v = rng.uniform(-kPi, kPi);
    for (double& v : p.theta_f) v = rng.uniform(-kPi, kPi);
    for (double& v : p.theta_lambda) v = rng.uniform(0.15, kPi - 0.15);
    return p;
}

OptTrace minimize(const LossFn& loss, const ParamVector& initial, const OptConfig& cfg) {
    if (cfg.max_iters < 1 || cfg.grad_step <= 0.0 || cfg.loss_tol <= 0.0 ||
        cfg.max_restarts < 0 || cfg.success_threshold < 0.0)
        throw std::invalid_argument("minimize: invalid OptConfig");
    initial.validate();

    const auto t0 = std::chrono::steady_clock::now();
    const int n_qubits = initial.n_qubits;
    auto f = [&](const std::vector<double>& x) {
        return loss(ParamVector::unflatten(n_qubits, x));
    };

    OptTrace best;
    int restarts = 0;
    std::vector<double> x0 = initial.flatten();
    // derive restart seeds from cfg.seed; the draw index keeps them distinct
    for (int run = 0; run <= cfg.max_restarts; ++run) {
        if (run > 0) {
            x0 = random_params(n_qubits, cfg.seed * 0x1000003ULL + static_cast<std::uint64_t>(run))
                     .flatten();
            ++restarts;
        }
        RunResult r = lbfgs_run(f, x0, cfg);
        const double final_loss = r.losses.back();
        if (best.losses.empty() || final_loss < best.losses.back()) {
            best.losses = std::move(r.losses);
            best.final_params = ParamVector::unflatten(n_qubits, r.final_x);
            best.converged = final_loss <= cfg.success_threshold || r.tol_converged;
        }
        if (best.losses.back() <= cfg.success_threshold) break;
    }
    best.restarts_used = restarts;
    best.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return best;
}

}  // namespace skewexp
