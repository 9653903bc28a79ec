#include "opinion/matrix_exp.hpp"

#include <cmath>
#include <stdexcept>

namespace opinion {

DenseMatrix DenseMatrix::identity(std::size_t size) {
    DenseMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix matmul(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.n != y.n) throw std::invalid_argument("matmul: size mismatch");
    const std::size_t n = x.n;
    DenseMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const double xik = x(i, k);
            if (xik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += xik * y(k, j);
        }
    }
    return r;
}

double trace(const DenseMatrix& m) {
    double t = 0.0;
    for (std::size_t i = 0; i < m.n; ++i) t += m(i, i);
    return t;
}

namespace {

double inf_norm(const DenseMatrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < m.n; ++j) row += std::abs(m(i, j));
        best = std::max(best, row);
    }
    return best;
}

// Solves D * X = E in place of E via Gaussian elimination with partial
// pivoting. D is consumed.
void solve_in_place(DenseMatrix& d, DenseMatrix& e) {
    const std::size_t n = d.n;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(d(r, col)) > std::abs(d(pivot, col))) pivot = r;
        if (d(pivot, col) == 0.0) throw std::domain_error("singular Pade denominator");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(d.a[pivot * n + j], d.a[col * n + j]);
                std::swap(e.a[pivot * n + j], e.a[col * n + j]);
            }
        }
        const double inv = 1.0 / d(col, col);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = d(r, col) * inv;
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) d(r, j) -= f * d(col, j);
            for (std::size_t j = 0; j < n; ++j) e(r, j) -= f * e(col, j);
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        const double inv = 1.0 / d(r, r);
        for (std::size_t j = 0; j < n; ++j) e(r, j) *= inv;
    }
}

} // namespace

DenseMatrix matrix_exponential(const DenseMatrix& m) {
    const std::size_t n = m.n;
    if (n == 0) throw std::invalid_argument("matrix_exponential: empty matrix");

    // Scale so the argument norm is <= 1/2, apply the (6,6) Pade
    // approximant, then undo the scaling by repeated squaring.
    const double norm = inf_norm(m);
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));

    DenseMatrix scaled = m;
    const double factor = std::ldexp(1.0, -squarings);
    for (double& v : scaled.a) v *= factor;

    constexpr int q = 6;
    DenseMatrix power = scaled;                  // scaled^k as k advances
    DenseMatrix numer = DenseMatrix::identity(n);
    DenseMatrix denom = DenseMatrix::identity(n);
    double coeff = 0.5;
    for (std::size_t idx = 0; idx < n * n; ++idx) {
        numer.a[idx] += coeff * power.a[idx];
        denom.a[idx] -= coeff * power.a[idx];
    }
    bool positive = true;  // denominator signs alternate: +, -, +, ...
    for (int k = 2; k <= q; ++k) {
        coeff *= static_cast<double>(q - k + 1) / static_cast<double>(k * (2 * q - k + 1));
        power = matmul(scaled, power);
        for (std::size_t idx = 0; idx < n * n; ++idx) {
            numer.a[idx] += coeff * power.a[idx];
            denom.a[idx] += (positive ? coeff : -coeff) * power.a[idx];
        }
        positive = !positive;
    }

    solve_in_place(denom, numer);
    for (int s = 0; s < squarings; ++s) numer = matmul(numer, numer);
    return numer;
}

} // namespace opinion
