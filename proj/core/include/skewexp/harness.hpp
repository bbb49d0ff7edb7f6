#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "skewexp/matgen.hpp"
#include "skewexp/optimizer.hpp"

namespace skewexp {

// exit-code contract: 0 success, 1 optimization did not reach threshold,
// 2 usage/input error
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotConverged = 1;
inline constexpr int kExitUsage = 2;

struct ApproximateFlags {
    OptConfig opt;
    bool unitary = false;            // input file holds a complex unitary
    bool fidelity = false;           // use the fidelity loss (unitary mode)
    bool warm_start_init = false;
    std::string trace_csv;           // empty = skip
    std::string params_out;          // empty = skip
};

struct ExperimentSpec {
    std::vector<int> n_qubits_list;  // each in [2, 7]
    MatrixFamily family = MatrixFamily::UNIFORM_REAL;
    int instances = 30;
    std::uint64_t base_seed = 0;
    OptConfig opt;
    std::string out_dir;

    void validate() const;  // throws std::invalid_argument
};

/// Prints the four closed-form spectrum checks for G; exit 0 iff all pass.
int cmd_verify(int n_qubits, double diag_shift, std::ostream& out);

int cmd_approximate(const std::string& input_path, const ApproximateFlags& flags,
                    std::ostream& out);

/// Batch runs reproducing the loss-curve experiments: one combined CSV and
/// one SVG per qubit count. CSV row order is deterministic.
int cmd_experiment(const ExperimentSpec& spec, std::ostream& out);

int cmd_gen(int n_qubits, MatrixFamily family, std::uint64_t seed,
            const std::string& out_path, std::ostream& out);

/// Writes warm-start parameters and reports their loss against G.
int cmd_warmstart(int n_qubits, const std::string& params_out, std::ostream& out);

/// Flat parameter-file round trip used by approximate/warmstart outputs.
void write_params_file(const std::string& path, const ParamVector& p);
ParamVector read_params_file(const std::string& path);

}  // namespace skewexp
