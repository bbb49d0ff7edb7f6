#include "skewexp/matgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "skewexp/rng.hpp"

namespace skewexp {

SignedPermutation SignedPermutation::identity(std::size_t n) {
    SignedPermutation p;
    p.dim = n;
    p.entries.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) p.entries[i * n + i] = 1.0;
    return p;
}

SignedPermutation SignedPermutation::from_columns(const std::vector<std::size_t>& rows,
                                                  const std::vector<int>& signs) {
    const std::size_t n = rows.size();
    if (signs.size() != n) throw std::invalid_argument("SignedPermutation: size mismatch");
    SignedPermutation p;
    p.dim = n;
    p.entries.assign(n * n, 0.0);
    for (std::size_t k = 0; k < n; ++k) p.entries[rows[k] * n + k] = signs[k];
    p.validate();
    return p;
}

void SignedPermutation::validate() const {
    if (entries.size() != dim * dim)
        throw std::invalid_argument("SignedPermutation: malformed dimensions");
    std::vector<int> row_count(dim, 0), col_count(dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const double v = at(i, j);
            if (v == 0.0) continue;
            if (v != 1.0 && v != -1.0)
                throw std::invalid_argument("SignedPermutation: entries must be in {-1, 0, +1}");
            ++row_count[i];
            ++col_count[j];
        }
    for (std::size_t i = 0; i < dim; ++i)
        if (row_count[i] != 1 || col_count[i] != 1)
            throw std::invalid_argument("SignedPermutation: not exactly one nonzero per row/column");
}

std::string family_name(MatrixFamily f) {
    switch (f) {
        case MatrixFamily::PM1_DENSE: return "pm1_dense";
        case MatrixFamily::PM1_SPARSE: return "pm1_sparse";
        case MatrixFamily::UNIFORM_REAL: return "uniform_real";
    }
    return "unknown";
}

std::optional<MatrixFamily> family_from_name(const std::string& name) {
    if (name == "pm1_dense") return MatrixFamily::PM1_DENSE;
    if (name == "pm1_sparse") return MatrixFamily::PM1_SPARSE;
    if (name == "uniform_real") return MatrixFamily::UNIFORM_REAL;
    return std::nullopt;
}

AntisymMatrix random_antisym(int n_qubits, MatrixFamily family, std::uint64_t seed,
                             double sparsity) {
    if (n_qubits < 1 || n_qubits > 7)
        throw std::out_of_range("random_antisym: n_qubits must be in [1, 7]");
    if (sparsity < 0.0 || sparsity >= 1.0)
        throw std::invalid_argument("random_antisym: sparsity must be in [0, 1)");
    const std::size_t n = std::size_t{1} << n_qubits;
    AntisymMatrix a(n);
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = 0.0;
            switch (family) {
                case MatrixFamily::PM1_DENSE:
                    v = rng.next_double() < 0.5 ? -1.0 : 1.0;
                    break;
                case MatrixFamily::PM1_SPARSE: {
                    const double u = rng.next_double();
                    if (u < sparsity) v = 0.0;
                    else v = (u - sparsity) < 0.5 * (1.0 - sparsity) ? -1.0 : 1.0;
                    break;
                }
                case MatrixFamily::UNIFORM_REAL:
                    v = rng.uniform(-1.0, 1.0);
                    break;
            }
            a.at(i, j) = v;
            a.at(j, i) = -v;
        }
    }
    return a;
}

AntisymMatrix sign_matrix(const AntisymMatrix& a) {
    AntisymMatrix s(a.dim);
    for (std::size_t k = 0; k < a.entries.size(); ++k) {
        const double v = a.entries[k];
        s.entries[k] = v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
    }
    return s;
}

AntisymMatrix apply_signed_perm(const AntisymMatrix& b, const SignedPermutation& p) {
    if (b.dim != p.dim)
        throw std::invalid_argument("apply_signed_perm: dimension mismatch");
    const std::size_t n = b.dim;
    // column k of P has its nonzero at row sigma[k] with sign s[k]
    std::vector<std::size_t> sigma(n);
    std::vector<double> s(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (p.at(i, k) != 0.0) { sigma[k] = i; s[k] = p.at(i, k); }
    AntisymMatrix out(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            out.at(k, l) = s[k] * s[l] * b.at(sigma[k], sigma[l]);
    return out;
}

bool is_transitive(const AntisymMatrix& b) {
    const std::size_t n = b.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double v = b.at(i, j);
            if (i == j) continue;
            if (v != 0.0 && v != 1.0 && v != -1.0)
                throw std::domain_error("is_transitive: entries must be in {-1, 0, +1}");
        }
    // Kahn's algorithm on edges i -> j where b_ij = +1
    std::vector<int> indeg(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (b.at(i, j) == 1.0) ++indeg[j];
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    std::size_t removed = 0;
    while (!ready.empty()) {
        const std::size_t v = ready.back();
        ready.pop_back();
        ++removed;
        for (std::size_t j = 0; j < n; ++j)
            if (b.at(v, j) == 1.0 && --indeg[j] == 0) ready.push_back(j);
    }
    return removed == n;
}

std::optional<SignedPermutation> find_canonical_perm(const AntisymMatrix& b) {
    const std::size_t n = b.dim;
    if (n > 8)
        throw std::out_of_range(
            "find_canonical_perm: N > 8; use the variational circuit path for larger matrices");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && std::abs(b.at(i, j)) != 1.0) return std::nullopt;  // not dense

    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});

    // permutations are visited in lexicographic order and the +1 root sign is
    // tried first, so the first valid candidate is the canonical witness (the
    // identity when b is already canonical)
    std::vector<int> signs(n);
    do {
        for (int s0 : {+1, -1}) {
            // for k < l we need s_k s_l B[sigma(k)][sigma(l)] = +1; fixing
            // s_0 pins every other sign through the k = 0 constraints
            signs[0] = s0;
            for (std::size_t l = 1; l < n; ++l)
                signs[l] = s0 * (b.at(sigma[0], sigma[l]) > 0.0 ? 1 : -1);
            bool ok = true;
            for (std::size_t k = 1; k < n && ok; ++k)
                for (std::size_t l = k + 1; l < n && ok; ++l)
                    if (signs[k] * signs[l] * b.at(sigma[k], sigma[l]) != 1.0) ok = false;
            if (ok) return SignedPermutation::from_columns(sigma, signs);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
}

}  // namespace skewexp
