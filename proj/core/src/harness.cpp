#include "skewexp/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "skewexp/eig.hpp"
#include "skewexp/expm.hpp"
#include "skewexp/io.hpp"
#include "skewexp/spectral_g.hpp"

namespace skewexp {

namespace {

int qubits_for_dim(std::size_t dim) {
    int n = 0;
    std::size_t d = dim;
    while (d > 1) {
        if (d & 1) return -1;
        d >>= 1;
        ++n;
    }
    return (dim >= 2 && n >= 1 && n <= 7) ? n : -1;
}

// nearest unitary via U = M (M^ M)^{-1/2}
ComplexDense polar_unitary(const ComplexDense& m) {
    const ComplexDense gram = m.adjoint() * m;
    const HermitianEig eig = hermitian_eig(gram);
    ComplexDense inv_sqrt(m.dim());
    const ComplexDense& w = eig.eigenvectors;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            cdouble acc = 0.0;
            for (std::size_t k = 0; k < m.dim(); ++k)
                acc += w.at(i, k) * std::conj(w.at(j, k)) / std::sqrt(eig.eigenvalues[k]);
            inv_sqrt.at(i, j) = acc;
        }
    return m * inv_sqrt;
}

std::vector<CsvRow> trace_rows(const OptTrace& t, int n_q, const std::string& family,
                               std::uint64_t seed) {
    std::vector<CsvRow> rows;
    rows.reserve(t.losses.size());
    for (std::size_t i = 0; i < t.losses.size(); ++i)
        rows.push_back({t.run_id, n_q, family, seed, t.restarts_used,
                        static_cast<int>(i), t.losses[i]});
    return rows;
}

constexpr std::uint64_t kParamSeedSalt = 0xD1B54A32D192ED03ULL;

}  // namespace

void ExperimentSpec::validate() const {
    if (instances < 1) throw std::invalid_argument("ExperimentSpec: instances must be >= 1");
    if (n_qubits_list.empty())
        throw std::invalid_argument("ExperimentSpec: empty n_qubits list");
    for (int n : n_qubits_list)
        if (n < 2 || n > 7)
            throw std::invalid_argument("ExperimentSpec: n_qubits must be in [2, 7]");
}

int cmd_verify(int n_qubits, double diag_shift, std::ostream& out) {
    if (n_qubits < 1 || n_qubits > 6) {
        out << "error: verify requires 1 <= n_qubits <= 6\n";
        return kExitUsage;
    }
    const GSpectrum spec = g_spectrum(n_qubits, diag_shift);
    const std::size_t n = spec.dim;

    const double residual = verify_spectrum(spec);
    const ComplexDense& v = spec.eigenvector_matrix;
    const double v_unitary = v.unitarity_defect();
    const double v_df =
        frobenius_distance(v, spec.phase_matrix * spec.fourier_matrix);

    ComplexDense recon = v;
    std::vector<cdouble> exp_lambda(n);
    for (std::size_t k = 0; k < n; ++k) exp_lambda[k] = std::exp(spec.eigenvalues[k]);
    recon.scale_cols(exp_lambda);
    recon = recon * v.adjoint();
    const double exp_gap = frobenius_distance(recon, expm_pade(build_g(n_qubits, diag_shift)));

    out << "eigenvalues:";
    for (const auto& l : spec.eigenvalues)
        out << ' ' << l.real() << (l.imag() >= 0.0 ? "+" : "") << l.imag() << "i";
    out << "\n";
    out << "max eigen-residual      " << residual << "\n";
    out << "||V^V - I||_F           " << v_unitary << "\n";
    out << "||V - D*F||_F           " << v_df << "\n";
    out << "||V e^L V^ - e^G||_F    " << exp_gap << "\n";

    const bool ok = residual <= 1e-10 && v_unitary <= 1e-12 && v_df <= 1e-12 && exp_gap <= 1e-8;
    out << (ok ? "all checks passed\n" : "CHECK FAILED\n");
    return ok ? kExitOk : kExitNotConverged;
}

int cmd_approximate(const std::string& input_path, const ApproximateFlags& flags,
                    std::ostream& out) {
    LossFn loss;
    int n_qubits = 0;
    AntisymMatrix target;
    ComplexDense target_u;

    try {
        if (flags.unitary) {
            target_u = read_complex_matrix(input_path);
            n_qubits = qubits_for_dim(target_u.dim());
            if (n_qubits < 0) {
                out << "error: matrix dimension must be a power of two in [2, 128]\n";
                return kExitUsage;
            }
            if (target_u.unitarity_defect() > 1e-8) {
                if (target_u.unitarity_defect() > 0.1) {
                    out << "error: input is not unitary\n";
                    return kExitUsage;
                }
                out << "note: input projected to the nearest unitary\n";
                target_u = polar_unitary(target_u);
            }
            const UnitaryLossMode mode =
                flags.fidelity ? UnitaryLossMode::FIDELITY : UnitaryLossMode::FROBENIUS;
            loss = [target_u, mode](const ParamVector& p) {
                return loss_unitary(p, target_u, mode);
            };
        } else {
            const RealMatrixFile file = read_real_matrix(input_path);
            n_qubits = qubits_for_dim(file.dim);
            if (n_qubits < 0) {
                out << "error: matrix dimension must be a power of two in [2, 128]\n";
                return kExitUsage;
            }
            target.dim = file.dim;
            target.entries = file.entries;
            target.validate();
            loss = [target](const ParamVector& p) { return loss_antisym(p, target); };
        }
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const ParamVector initial = flags.warm_start_init
                                    ? warm_start(n_qubits)
                                    : random_params(n_qubits, flags.opt.seed ^ kParamSeedSalt);
    OptTrace trace = minimize(loss, initial, flags.opt);
    trace.run_id = std::filesystem::path(input_path).stem().string();

    if (!flags.trace_csv.empty())
        write_loss_csv(flags.trace_csv,
                       trace_rows(trace, n_qubits, flags.unitary ? "unitary" : "file",
                                  flags.opt.seed));
    if (!flags.params_out.empty()) write_params_file(flags.params_out, trace.final_params);

    out << "final loss: " << trace.losses.back() << "\n";
    out << "iterations: " << trace.losses.size() - 1 << ", restarts: " << trace.restarts_used
        << ", converged: " << (trace.converged ? "yes" : "no") << "\n";
    return trace.converged ? kExitOk : kExitNotConverged;
}

int cmd_experiment(const ExperimentSpec& spec, std::ostream& out) {
    try {
        spec.validate();
        std::filesystem::create_directories(spec.out_dir);
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::vector<CsvRow> rows;
    const std::string fam = family_name(spec.family);

    try {
        for (int n_q : spec.n_qubits_list) {
            std::vector<LossCurve> curves;
            for (int i = 0; i < spec.instances; ++i) {
                const std::uint64_t seed = spec.base_seed + static_cast<std::uint64_t>(i);
                const AntisymMatrix target = random_antisym(n_q, spec.family, seed);
                OptConfig cfg = spec.opt;
                cfg.seed = seed;
                const ParamVector init = random_params(n_q, seed ^ kParamSeedSalt);
                OptTrace trace = minimize(
                    [&target](const ParamVector& p) { return loss_antisym(p, target); },
                    init, cfg);
                std::ostringstream id;
                id << "nq" << n_q << "_" << fam << "_s" << seed;
                trace.run_id = id.str();
                auto r = trace_rows(trace, n_q, fam, seed);
                rows.insert(rows.end(), r.begin(), r.end());
                curves.push_back({trace.run_id, trace.losses});
                out << trace.run_id << ": final loss " << trace.losses.back() << "\n";
            }
            write_loss_svg(spec.out_dir + "/loss_nq" + std::to_string(n_q) + ".svg",
                           "loss vs iteration, n_q=" + std::to_string(n_q) + ", " + fam,
                           curves);
        }
        std::stable_sort(rows.begin(), rows.end(), [](const CsvRow& a, const CsvRow& b) {
            return a.run_id != b.run_id ? a.run_id < b.run_id : a.iteration < b.iteration;
        });
        write_loss_csv(spec.out_dir + "/losses.csv", rows);
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_gen(int n_qubits, MatrixFamily family, std::uint64_t seed,
            const std::string& out_path, std::ostream& out) {
    try {
        const AntisymMatrix a = random_antisym(n_qubits, family, seed);
        write_real_matrix(out_path, a.dim, a.entries);
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_warmstart(int n_qubits, const std::string& params_out, std::ostream& out) {
    try {
        const ParamVector p = warm_start(n_qubits);
        AntisymMatrix g(std::size_t{1} << n_qubits);
        const ComplexDense gm = build_g(n_qubits, 0.0);
        for (std::size_t k = 0; k < g.entries.size(); ++k) g.entries[k] = gm.data()[k].real();
        out << "warm-start loss against G: " << loss_antisym(p, g) << "\n";
        if (!params_out.empty()) write_params_file(params_out, p);
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

void write_params_file(const std::string& path, const ParamVector& p) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << "n_qubits " << p.n_qubits << "\n";
    auto dump = [&](const char* name, const std::vector<double>& v) {
        out << name;
        for (double x : v) out << ' ' << format_full(x);
        out << "\n";
    };
    dump("theta_p", p.theta_p);
    dump("theta_d", p.theta_d);
    dump("theta_f", p.theta_f);
    dump("theta_lambda", p.theta_lambda);
    if (!out) throw std::runtime_error("write failed: " + path);
}

ParamVector read_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    ParamVector p;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream iss(line);
        std::string key;
        if (!(iss >> key)) continue;
        if (key == "n_qubits") {
            iss >> p.n_qubits;
        } else {
            std::vector<double>* dst = nullptr;
            if (key == "theta_p") dst = &p.theta_p;
            else if (key == "theta_d") dst = &p.theta_d;
            else if (key == "theta_f") dst = &p.theta_f;
            else if (key == "theta_lambda") dst = &p.theta_lambda;
            else throw ParseError("unknown key '" + key + "'", line_no);
            double v;
            while (iss >> v) dst->push_back(v);
        }
    }
    p.validate();
    return p;
}

}  // namespace skewexp
