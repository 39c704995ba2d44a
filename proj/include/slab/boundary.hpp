#pragma once

#include <array>
#include <vector>

#include "slab/core.hpp"
#include "slab/linalg.hpp"

namespace slab {

struct BoundaryMatrix {
    Matrix4c entries;
    PhysicalParams params;
    PhaseConfig phases;
    cplx K;

    double scale() const { return hadamard_scale(entries); }
};

/// The 4x4 system matrix S(K) for the amplitudes A1..A4.
BoundaryMatrix build_S(const PhysicalParams& params, const PhaseConfig& phases, cplx K);
cplx det_S(const PhysicalParams& params, const PhaseConfig& phases, cplx K);

/// S(K) in extended precision, for the interpolation oracle.
Matrix4l build_S_extended(const PhysicalParams& params, const PhaseConfig& phases, lcplx K);

/// det S as a polynomial in K, c[i] multiplies K^i. Extended precision so that
/// nearly coincident roots stay resolvable at double accuracy.
struct QuarticPoly {
    std::array<lcplx, 5> c{};

    lcplx operator()(lcplx K) const;
    cplx operator()(cplx K) const { return cplx((*this)(lcplx(K))); }
    /// d-th derivative at K.
    lcplx derivative(lcplx K, int d = 1) const;
    /// Largest coefficient magnitude.
    double norm() const;
    /// Coefficients rounded to double.
    std::array<cplx, 5> coefficients() const;
};

inline const std::array<cplx, 5> kSamplePoints = {cplx{0, 0}, cplx{1, 0}, cplx{-1, 0}, cplx{2, 0}, cplx{0, 1}};
inline const cplx kCertifyPoint{0, -2};

/// Interpolates det S at the fixed sample points; throws ConsistencyError if the certifier misses.
QuarticPoly quartic_from_samples(const PhysicalParams& params, const PhaseConfig& phases);

/// All roots with multiplicity. Throws DegenerateError if q is identically zero.
std::vector<cplx> numeric_roots(const QuarticPoly& q);

/// Count of singular values above 1e-10 of the largest.
int rank_S(const PhysicalParams& params, const PhaseConfig& phases, cplx K);

struct CoefficientVector {
    std::array<cplx, 4> A{};
};

struct NullSpace {
    std::vector<CoefficientVector> basis;  // orthonormal
    int rank = 4;
    double max_residual = 0.0;  // max |S A| / |S|
};

/// Orthonormal null-space basis at a root. Throws NoNullSpace when K is not a root.
NullSpace nullspace_A(const PhysicalParams& params, const PhaseConfig& phases, cplx K_root);

}  // namespace slab
