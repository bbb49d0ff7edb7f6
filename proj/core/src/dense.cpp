#include "skewexp/dense.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace skewexp {

ComplexDense ComplexDense::identity(std::size_t n) {
    ComplexDense m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexDense ComplexDense::adjoint() const {
    ComplexDense r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            r.at(j, i) = std::conj(at(i, j));
    return r;
}

ComplexDense ComplexDense::conjugate() const {
    ComplexDense r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = std::conj(a_[k]);
    return r;
}

ComplexDense ComplexDense::transpose() const {
    ComplexDense r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

ComplexDense ComplexDense::operator*(const ComplexDense& rhs) const {
    if (n_ != rhs.n_)
        throw std::invalid_argument("ComplexDense: incompatible operands " +
                                    std::to_string(n_) + " vs " + std::to_string(rhs.n_));
    ComplexDense r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            const cdouble v = at(i, k);
            if (v == cdouble{}) continue;
            const cdouble* rrow = &rhs.a_[k * n_];
            cdouble* out = &r.a_[i * n_];
            for (std::size_t j = 0; j < n_; ++j) out[j] += v * rrow[j];
        }
    }
    return r;
}

ComplexDense ComplexDense::operator+(const ComplexDense& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("ComplexDense: incompatible operands");
    ComplexDense r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + rhs.a_[k];
    return r;
}

ComplexDense ComplexDense::operator-(const ComplexDense& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("ComplexDense: incompatible operands");
    ComplexDense r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - rhs.a_[k];
    return r;
}

ComplexDense ComplexDense::scaled(cdouble factor) const {
    ComplexDense r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * factor;
    return r;
}

void ComplexDense::scale_rows(const std::vector<cdouble>& d) {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            a_[i * n_ + j] *= d[i];
}

void ComplexDense::scale_cols(const std::vector<cdouble>& d) {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            a_[i * n_ + j] *= d[j];
}

double ComplexDense::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexDense::one_norm() const {
    double best = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n_; ++i) s += std::abs(at(i, j));
        best = std::max(best, s);
    }
    return best;
}

double ComplexDense::max_abs() const {
    double best = 0.0;
    for (const auto& v : a_) best = std::max(best, std::abs(v));
    return best;
}

double ComplexDense::max_abs_imag() const {
    double best = 0.0;
    for (const auto& v : a_) best = std::max(best, std::abs(v.imag()));
    return best;
}

bool ComplexDense::is_finite() const {
    for (const auto& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double ComplexDense::unitarity_defect() const {
    ComplexDense p = adjoint() * (*this);
    for (std::size_t i = 0; i < n_; ++i) p.at(i, i) -= 1.0;
    return p.frobenius_norm();
}

void AntisymMatrix::validate(double tol) const {
    if (dim < 1 || entries.size() != dim * dim)
        throw std::invalid_argument("AntisymMatrix: malformed dimensions");
    for (std::size_t i = 0; i < dim; ++i) {
        if (std::abs(at(i, i)) > tol)
            throw std::invalid_argument("AntisymMatrix: nonzero diagonal at index " +
                                        std::to_string(i));
        for (std::size_t j = i + 1; j < dim; ++j) {
            if (std::abs(at(j, i) + at(i, j)) > tol)
                throw std::invalid_argument(
                    "AntisymMatrix: entries (" + std::to_string(i) + "," + std::to_string(j) +
                    ") and (" + std::to_string(j) + "," + std::to_string(i) +
                    ") are not negatives of each other");
        }
    }
}

ComplexDense AntisymMatrix::to_complex() const {
    ComplexDense m(dim);
    for (std::size_t k = 0; k < entries.size(); ++k) m.data()[k] = entries[k];
    return m;
}

double AntisymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : entries) s += v * v;
    return std::sqrt(s);
}

double frobenius_distance(const ComplexDense& x, const ComplexDense& y) {
    if (x.dim() != y.dim())
        throw std::invalid_argument("frobenius_distance: incompatible operands");
    double s = 0.0;
    for (std::size_t k = 0; k < x.data().size(); ++k) s += std::norm(x.data()[k] - y.data()[k]);
    return std::sqrt(s);
}

}  // namespace skewexp
