#pragma once

#include <array>
#include <vector>

#include "slab/core.hpp"

namespace slab {

using lcplx = std::complex<long double>;
using Matrix4c = std::array<std::array<cplx, 4>, 4>;
using Matrix4l = std::array<std::array<lcplx, 4>, 4>;
using Vector4c = std::array<cplx, 4>;

/// Gaussian elimination with partial pivoting.
cplx determinant(const Matrix4c& m);
lcplx determinant(const Matrix4l& m);
/// Laplace expansion along the first row.
cplx determinant_cofactor(const Matrix4c& m);
/// Product of row max-magnitudes.
double hadamard_scale(const Matrix4c& m);

Vector4c multiply(const Matrix4c& m, const Vector4c& v);
double norm2(const Vector4c& v);

struct Svd4 {
    std::array<double, 4> sigma;    // descending
    std::array<Vector4c, 4> right;  // right[i] pairs with sigma[i]
};
Svd4 svd(const Matrix4c& m);

/// Roots of sum c[i] z^i via companion-matrix eigenvalues. c.back() must be nonzero.
std::vector<lcplx> companion_roots(const std::vector<lcplx>& c);

/// Solves the square system a x = b (partial-pivot LU).
std::vector<lcplx> solve(const std::vector<std::vector<lcplx>>& a, const std::vector<lcplx>& b);

}  // namespace slab
