#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewexp/dense.hpp"

namespace skewexp {

/// Permutation matrix with entries from {-1, 0, +1}: exactly one nonzero
/// per row and column, orthogonal by construction.
struct SignedPermutation {
    std::size_t dim = 0;
    std::vector<double> entries;  // row-major

    static SignedPermutation identity(std::size_t n);
    /// P with column k nonzero at row rows[k], value signs[k].
    static SignedPermutation from_columns(const std::vector<std::size_t>& rows,
                                          const std::vector<int>& signs);

    double at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
    void validate() const;
};

enum class MatrixFamily { PM1_DENSE, PM1_SPARSE, UNIFORM_REAL };

std::string family_name(MatrixFamily f);
std::optional<MatrixFamily> family_from_name(const std::string& name);

/// Random antisymmetric test matrix: upper triangle i.i.d. from the family
/// distribution (splitmix64-seeded), lower triangle its negated copy.
AntisymMatrix random_antisym(int n_qubits, MatrixFamily family, std::uint64_t seed,
                             double sparsity = 1.0 / 3.0);

/// Entrywise sign with sign(0) = 0.
AntisymMatrix sign_matrix(const AntisymMatrix& a);

/// P^T B P.
AntisymMatrix apply_signed_perm(const AntisymMatrix& b, const SignedPermutation& p);

/// True iff the +1 edge digraph of b is acyclic (some vertex reordering
/// puts every nonzero upper-triangle entry at +1). Entries must be in
/// {-1, 0, +1} off the diagonal.
bool is_transitive(const AntisymMatrix& b);

/// Exhaustive search over signed permutations for the lexicographically
/// first P with P^T B P = G. Requires a dense {-1,+1} sign pattern and
/// N <= 8. Returns nullopt when no witness exists.
std::optional<SignedPermutation> find_canonical_perm(const AntisymMatrix& b);

}  // namespace skewexp
