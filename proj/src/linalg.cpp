#include "slab/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <utility>

namespace slab {

namespace {

template <class C>
C eliminate(std::array<std::array<C, 4>, 4> m) {
    C det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (m[piv][col] == C{}) return 0.0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < 4; ++r) {
            const C f = m[r][col] / m[col][col];
            for (int c = col + 1; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

cplx det3(const Matrix4c& m, int skip_col) {
    std::array<int, 3> c{};
    for (int i = 0, j = 0; i < 4; ++i)
        if (i != skip_col) c[j++] = i;
    const auto& a = m[1];
    const auto& b = m[2];
    const auto& d = m[3];
    return a[c[0]] * (b[c[1]] * d[c[2]] - b[c[2]] * d[c[1]]) - a[c[1]] * (b[c[0]] * d[c[2]] - b[c[2]] * d[c[0]]) +
           a[c[2]] * (b[c[0]] * d[c[1]] - b[c[1]] * d[c[0]]);
}

}  // namespace

cplx determinant(const Matrix4c& m) { return eliminate(m); }

lcplx determinant(const Matrix4l& m) { return eliminate(m); }

cplx determinant_cofactor(const Matrix4c& m) {
    cplx det = 0.0;
    for (int j = 0; j < 4; ++j) det += (j % 2 == 0 ? 1.0 : -1.0) * m[0][j] * det3(m, j);
    return det;
}

double hadamard_scale(const Matrix4c& m) {
    double s = 1.0;
    for (const auto& row : m) {
        double r = 0.0;
        for (const auto& e : row) r = std::max(r, std::abs(e));
        s *= r;
    }
    return s;
}

Vector4c multiply(const Matrix4c& m, const Vector4c& v) {
    Vector4c out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i] += m[i][j] * v[j];
    return out;
}

double norm2(const Vector4c& v) {
    double s = 0.0;
    for (const auto& e : v) s += std::norm(e);
    return std::sqrt(s);
}

Svd4 svd(const Matrix4c& m) {
    Eigen::Matrix4cd a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = m[i][j];
    Eigen::JacobiSVD<Eigen::Matrix4cd> s(a, Eigen::ComputeFullV);
    Svd4 out{};
    for (int i = 0; i < 4; ++i) {
        out.sigma[i] = s.singularValues()(i);
        for (int j = 0; j < 4; ++j) out.right[i][j] = s.matrixV()(j, i);
    }
    return out;
}

using MatrixXl = Eigen::Matrix<lcplx, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXl = Eigen::Matrix<lcplx, Eigen::Dynamic, 1>;

std::vector<lcplx> companion_roots(const std::vector<lcplx>& c) {
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg < 1) return {};
    if (deg == 1) return {-c[0] / c[1]};
    MatrixXl comp = MatrixXl::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0L;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i] / c[deg];
    Eigen::ComplexEigenSolver<MatrixXl> es(comp, false);
    std::vector<lcplx> roots(deg);
    for (int i = 0; i < deg; ++i) roots[i] = es.eigenvalues()(i);
    return roots;
}

std::vector<lcplx> solve(const std::vector<std::vector<lcplx>>& a, const std::vector<lcplx>& b) {
    const int n = static_cast<int>(b.size());
    MatrixXl m(n, n);
    VectorXl rhs(n);
    for (int i = 0; i < n; ++i) {
        rhs(i) = b[i];
        for (int j = 0; j < n; ++j) m(i, j) = a[i][j];
    }
    VectorXl x = m.partialPivLu().solve(rhs);
    return {x.data(), x.data() + n};
}

}  // namespace slab
