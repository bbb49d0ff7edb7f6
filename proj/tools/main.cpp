// Command-line harness: spectrum verification, single-target circuit
// approximation, batch loss-curve experiments, and test-matrix generation.

#include <CLI11.hpp>
#include <iostream>

#include "skewexp/harness.hpp"

using namespace skewexp;

int main(int argc, char** argv) {
    CLI::App app{"Variational circuit synthesis for antisymmetric-matrix exponentials"};
    app.require_subcommand(1);

    // verify
    int v_n = 2;
    double v_shift = 0.0;
    auto* verify = app.add_subcommand("verify", "Check the closed-form spectrum of G");
    verify->add_option("n_qubits", v_n, "qubit count, 1..6")->required();
    verify->add_option("--shift", v_shift, "uniform diagonal shift g");

    // approximate
    std::string a_input;
    ApproximateFlags a_flags;
    auto* approx = app.add_subcommand("approximate", "Fit the circuit to a matrix file");
    approx->add_option("input", a_input, "matrix file path")->required();
    approx->add_option("--max-iter", a_flags.opt.max_iters, "iteration cap");
    approx->add_option("--restarts", a_flags.opt.max_restarts, "max random restarts");
    approx->add_option("--seed", a_flags.opt.seed, "PRNG seed");
    approx->add_option("--threshold", a_flags.opt.success_threshold, "success loss threshold");
    approx->add_flag("--unitary", a_flags.unitary, "input is a complex unitary (re,im pairs)");
    approx->add_flag("--fidelity", a_flags.fidelity, "use the fidelity loss (with --unitary)");
    approx->add_flag("--warm-start", a_flags.warm_start_init, "start from warm-start parameters");
    approx->add_option("--trace-csv", a_flags.trace_csv, "write the loss trace CSV here");
    approx->add_option("--params-out", a_flags.params_out, "write final parameters here");

    // experiment
    ExperimentSpec e_spec;
    std::string e_family = "uniform_real";
    auto* exper = app.add_subcommand("experiment", "Batch loss-curve experiments");
    exper->add_option("--nq", e_spec.n_qubits_list, "qubit counts, each in 2..7")->required();
    exper->add_option("--family", e_family, "pm1_dense | pm1_sparse | uniform_real");
    exper->add_option("--instances", e_spec.instances, "matrices per qubit count");
    exper->add_option("--seed", e_spec.base_seed, "base seed; instance i uses seed+i");
    exper->add_option("--max-iter", e_spec.opt.max_iters, "iteration cap");
    exper->add_option("--restarts", e_spec.opt.max_restarts, "max random restarts");
    exper->add_option("--threshold", e_spec.opt.success_threshold, "success loss threshold");
    exper->add_option("--out", e_spec.out_dir, "output directory")->required();

    // gen
    int g_n = 2;
    std::string g_family = "uniform_real", g_out;
    std::uint64_t g_seed = 0;
    auto* gen = app.add_subcommand("gen", "Generate a random antisymmetric matrix file");
    gen->add_option("n_qubits", g_n, "qubit count, 1..7")->required();
    gen->add_option("out", g_out, "output path")->required();
    gen->add_option("--family", g_family, "pm1_dense | pm1_sparse | uniform_real");
    gen->add_option("--seed", g_seed, "PRNG seed");

    // warmstart
    int w_n = 2;
    std::string w_out;
    auto* warm = app.add_subcommand("warmstart", "Emit warm-start parameters for G");
    warm->add_option("n_qubits", w_n, "qubit count, 1..7")->required();
    warm->add_option("--params-out", w_out, "write parameters here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(v_n, v_shift, std::cout);
        if (*approx) return cmd_approximate(a_input, a_flags, std::cout);
        if (*exper) {
            const auto fam = family_from_name(e_family);
            if (!fam) {
                std::cout << "error: unknown family '" << e_family << "'\n";
                return kExitUsage;
            }
            e_spec.family = *fam;
            return cmd_experiment(e_spec, std::cout);
        }
        if (*gen) {
            const auto fam = family_from_name(g_family);
            if (!fam) {
                std::cout << "error: unknown family '" << g_family << "'\n";
                return kExitUsage;
            }
            return cmd_gen(g_n, *fam, g_seed, g_out, std::cout);
        }
        if (*warm) return cmd_warmstart(w_n, w_out, std::cout);
    } catch (const std::exception& e) {
        std::cout << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
