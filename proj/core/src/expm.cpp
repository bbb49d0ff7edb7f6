#include "skewexp/expm.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace skewexp {

ComplexDense lu_solve(ComplexDense a, const ComplexDense& b) {
    const std::size_t n = a.dim();
    ComplexDense x = b;
    std::vector<std::size_t> piv(n);
    for (std::size_t i = 0; i < n; ++i) piv[i] = i;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        double bestmag = std::abs(a.at(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            double m = std::abs(a.at(r, col));
            if (m > bestmag) { bestmag = m; best = r; }
        }
        if (bestmag == 0.0) throw std::runtime_error("lu_solve: singular matrix");
        if (best != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(col, j), a.at(best, j));
                std::swap(x.at(col, j), x.at(best, j));
            }
        }
        const cdouble pivval = a.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const cdouble f = a.at(r, col) / pivval;
            if (f == cdouble{}) continue;
            for (std::size_t j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
            for (std::size_t j = 0; j < n; ++j) x.at(r, j) -= f * x.at(col, j);
        }
    }
    // back substitution
    for (std::size_t col = n; col-- > 0;) {
        const cdouble pivval = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) x.at(col, j) /= pivval;
        for (std::size_t r = 0; r < col; ++r) {
            const cdouble f = a.at(r, col);
            if (f == cdouble{}) continue;
            for (std::size_t j = 0; j < n; ++j) x.at(r, j) -= f * x.at(col, j);
        }
    }
    return x;
}

ComplexDense expm_pade(const ComplexDense& m) {
    if (!m.is_finite()) throw std::invalid_argument("expm_pade: non-finite input");
    const std::size_t n = m.dim();

    // degree-13 diagonal Pade coefficients
    static constexpr std::array<double, 14> c = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
        1187353796428800.0,  129060195264000.0,   10559470521600.0,
        670442572800.0,      33522128640.0,       1323241920.0,
        40840800.0,          960960.0,            16380.0,
        182.0,               1.0};

    int squarings = 0;
    const double nrm = m.one_norm();
    ComplexDense a = m;
    if (nrm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
        a = m.scaled(std::ldexp(1.0, -squarings));
    }

    const ComplexDense ident = ComplexDense::identity(n);
    const ComplexDense a2 = a * a;
    const ComplexDense a4 = a2 * a2;
    const ComplexDense a6 = a4 * a2;

    // U = A (A6 (c13 A6 + c11 A4 + c9 A2) + c7 A6 + c5 A4 + c3 A2 + c1 I)
    ComplexDense u_inner = a6.scaled(c[13]) + a4.scaled(c[11]) + a2.scaled(c[9]);
    ComplexDense u = a * (a6 * u_inner + a6.scaled(c[7]) + a4.scaled(c[5]) +
                          a2.scaled(c[3]) + ident.scaled(c[1]));
    // V = A6 (c12 A6 + c10 A4 + c8 A2) + c6 A6 + c4 A4 + c2 A2 + c0 I
    ComplexDense v_inner = a6.scaled(c[12]) + a4.scaled(c[10]) + a2.scaled(c[8]);
    ComplexDense v = a6 * v_inner + a6.scaled(c[6]) + a4.scaled(c[4]) +
                     a2.scaled(c[2]) + ident.scaled(c[0]);

    ComplexDense r = lu_solve(v - u, (v + u));

    for (int s = 0; s < squarings; ++s) {
        r = r * r;
        if (!r.is_finite()) throw std::runtime_error("expm_pade: overflow during squaring");
    }
    return r;
}

}  // namespace skewexp
