#ifndef OPINION_MATRIX_EXP_HPP
#define OPINION_MATRIX_EXP_HPP

#include <cstddef>
#include <vector>

namespace opinion {

/// Dense row-major square matrix, just big enough for the balance index.
struct DenseMatrix {
    std::size_t n = 0;
    std::vector<double> a;

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t size) : n(size), a(size * size, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    static DenseMatrix identity(std::size_t size);
};

DenseMatrix matmul(const DenseMatrix& x, const DenseMatrix& y);

/// Matrix exponential by scaling-and-squaring with a degree-6 diagonal Pade
/// kernel. Trace accuracy is well inside relative 1e-9 for the matrices the
/// balance index sees.
DenseMatrix matrix_exponential(const DenseMatrix& m);

double trace(const DenseMatrix& m);

} // namespace opinion

#endif
