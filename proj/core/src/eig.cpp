#include "skewexp/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace skewexp {

namespace {

double offdiag_norm(const ComplexDense& h) {
    double s = 0.0;
    const std::size_t n = h.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) s += std::norm(h.at(i, j));
    return std::sqrt(s);
}

}  // namespace

HermitianEig hermitian_eig(const ComplexDense& h) {
    const std::size_t n = h.dim();
    const double hnorm = h.frobenius_norm();

    {
        ComplexDense defect = h - h.adjoint();
        if (defect.frobenius_norm() > 1e-12 * std::max(1.0, hnorm))
            throw std::domain_error("hermitian_eig: input is not Hermitian");
    }

    ComplexDense a = h;
    // symmetrize exactly so the diagonal is real from the start
    for (std::size_t i = 0; i < n; ++i) {
        a.at(i, i) = a.at(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            cdouble avg = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
            a.at(i, j) = avg;
            a.at(j, i) = std::conj(avg);
        }
    }

    ComplexDense v = ComplexDense::identity(n);
    const double target = 1e-13 * hnorm;

    int sweep = 0;
    while (offdiag_norm(a) > target) {
        if (++sweep > 100)
            throw std::runtime_error("hermitian_eig: no convergence after 100 sweeps");
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cdouble hpq = a.at(p, q);
                const double habs = std::abs(hpq);
                if (habs == 0.0) continue;
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();

                // stable rotation zeroing the (p,q) entry of the Hermitian block
                // [[app, hpq],[conj(hpq), aqq]]: tan(2 theta) = 2|hpq|/(aqq - app),
                // taking the smaller-magnitude tangent root so the rotation tends
                // to the identity as the entry vanishes
                const double tau = (aqq - app) / (2.0 * habs);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cdouble phase = hpq / habs;
                const cdouble j_pp = c;
                const cdouble j_qp = -s * std::conj(phase);
                const cdouble j_pq = s * phase;
                const cdouble j_qq = c;

                // A <- J^dagger A J, applied as row and column updates
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble akp = a.at(k, p);
                    const cdouble akq = a.at(k, q);
                    a.at(k, p) = akp * j_pp + akq * j_qp;
                    a.at(k, q) = akp * j_pq + akq * j_qq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble apk = a.at(p, k);
                    const cdouble aqk = a.at(q, k);
                    a.at(p, k) = std::conj(j_pp) * apk + std::conj(j_qp) * aqk;
                    a.at(q, k) = std::conj(j_pq) * apk + std::conj(j_qq) * aqk;
                }
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
                a.at(p, p) = a.at(p, p).real();
                a.at(q, q) = a.at(q, q).real();

                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble vkp = v.at(k, p);
                    const cdouble vkq = v.at(k, q);
                    v.at(k, p) = vkp * j_pp + vkq * j_qp;
                    v.at(k, q) = vkp * j_pq + vkq * j_qq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a.at(i, i).real() < a.at(j, j).real();
    });

    HermitianEig out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexDense(n);
    for (std::size_t c = 0; c < n; ++c) {
        out.eigenvalues[c] = a.at(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors.at(r, c) = v.at(r, order[c]);
    }
    return out;
}

}  // namespace skewexp
