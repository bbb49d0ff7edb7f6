#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace skewexp {

using cdouble = std::complex<double>;

/// Dense N x N complex matrix, row-major. The universal carrier for
/// unitaries, generators and eigenvector matrices.
class ComplexDense {
public:
    ComplexDense() = default;
    explicit ComplexDense(std::size_t n) : n_(n), a_(n * n) {}

    static ComplexDense identity(std::size_t n);

    std::size_t dim() const { return n_; }

    cdouble& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const cdouble& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    std::vector<cdouble>& data() { return a_; }
    const std::vector<cdouble>& data() const { return a_; }

    ComplexDense adjoint() const;
    ComplexDense conjugate() const;
    ComplexDense transpose() const;

    ComplexDense operator*(const ComplexDense& rhs) const;
    ComplexDense operator+(const ComplexDense& rhs) const;
    ComplexDense operator-(const ComplexDense& rhs) const;
    ComplexDense scaled(cdouble factor) const;

    /// Left-multiply by a diagonal matrix: row i scaled by d[i].
    void scale_rows(const std::vector<cdouble>& d);
    /// Right-multiply by a diagonal matrix: column j scaled by d[j].
    void scale_cols(const std::vector<cdouble>& d);

    double frobenius_norm() const;
    double one_norm() const;          // max absolute column sum
    double max_abs() const;
    double max_abs_imag() const;
    bool is_finite() const;

    /// ||this^dagger * this - I||_F
    double unitarity_defect() const;

private:
    std::size_t n_ = 0;
    std::vector<cdouble> a_;
};

/// Real N x N matrix with zero diagonal and a_ji = -a_ij.
struct AntisymMatrix {
    std::size_t dim = 0;
    std::vector<double> entries;  // row-major, dim*dim

    AntisymMatrix() = default;
    explicit AntisymMatrix(std::size_t n) : dim(n), entries(n * n, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
    double at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }

    /// Throws std::invalid_argument if the antisymmetry invariants fail.
    void validate(double tol = 0.0) const;

    ComplexDense to_complex() const;
    double frobenius_norm() const;
};

/// sqrt(sum_ij |x_ij - y_ij|^2). Throws on dimension mismatch.
double frobenius_distance(const ComplexDense& x, const ComplexDense& y);

}  // namespace skewexp
