#include "slab/modes.hpp"

#include <algorithm>
#include <cmath>

#include "slab/errors.hpp"
#include "slab/kernels.hpp"

namespace slab {

namespace {

void check_mode(const SlabMode& m) {
    if (norm2(m.A.A) == 0.0) throw DomainError("A", "zero coefficient vector is not a mode");
}

void check_z(const SlabMode& m, double z) {
    const double a = m.params.half_width();
    if (!(std::abs(z) <= a * (1.0 + 1e-12))) throw DomainError("z", "outside the slab");
}

}  // namespace

Spinor longitudinal_factors(const SlabMode& mode, double z) {
    check_z(mode, z);
    const double k = mode.params.k();
    const double p = mode.params.p();
    const double al = mode.params.alpha();
    const double be = mode.params.beta();
    const auto& A = mode.A.A;
    const cplx ep = std::polar(1.0, k * z);
    const cplx em = std::conj(ep);

    Spinor c{};
    c[0] = ep * (A[0] + A[1]) + em * (A[2] + A[3]);
    c[2] = ep * (A[0] * al + A[1] * be) + em * (A[2] * al + A[3] * be);
    if (mode.transverse.n() > 0) {
        if (k - p == 0.0 || k + p == 0.0) throw DomainError("k", "k = +-p makes the spinor weights singular");
        const double wm = 1.0 / (k - p);
        const double wp = 1.0 / (k + p);
        c[1] = ep * (A[0] * wm + A[1] * wp) - em * (A[2] * wp + A[3] * wm);
        c[3] = ep * (A[0] * al * wm + A[1] * be * wp) - em * (A[2] * al * wp + A[3] * be * wm);
    }
    return c;
}

Spinor assemble_phi(const SlabMode& mode, double y, double z) {
    check_mode(mode);
    const Spinor c = longitudinal_factors(mode, z);
    const double f = eval_f(mode.transverse, y);
    const double g = eval_g(mode.transverse, y);
    return {f * c[0], g * c[1], f * c[2], g * c[3]};
}

double current_Jz(const SlabMode& mode, double y, double z) {
    const Spinor phi = assemble_phi(mode, y, z);
    return (std::norm(phi[0]) - std::norm(phi[2])) - (std::norm(phi[1]) - std::norm(phi[3]));
}

std::vector<double> current_Jz_grid(const SlabMode& mode, std::span<const double> ys, double z) {
    check_mode(mode);
    const Spinor c = longitudinal_factors(mode, z);
    const Profiles pr = eval_profiles(mode.transverse, ys);
    std::vector<double> out(ys.size());
    kernels::current_density(pr.f, pr.g, std::norm(c[0]) - std::norm(c[2]), std::norm(c[1]) - std::norm(c[3]), out);
    return out;
}

BoundaryReport boundary_residual(const SlabMode& mode, std::span<const double> y_grid) {
    check_mode(mode);
    if (y_grid.empty()) throw DomainError("y_grid", "must be nonempty");
    const double a = mode.params.half_width();
    const Profiles pr = eval_profiles(mode.transverse, y_grid);

    BoundaryReport r;
    r.lower_pair_vanishes = std::all_of(pr.g.begin(), pr.g.end(), [](double v) { return v == 0.0; });

    auto scan = [&](double z, bool boundary) {
        const Spinor c = longitudinal_factors(mode, z);
        std::vector<double> j(y_grid.size());
        kernels::current_density(pr.f, pr.g, std::norm(c[0]) - std::norm(c[2]), std::norm(c[1]) - std::norm(c[3]), j);
        for (std::size_t i = 0; i < j.size(); ++i) {
            (boundary ? r.boundary_max : r.interior_max) = std::max(boundary ? r.boundary_max : r.interior_max, std::abs(j[i]));
            const double dens = pr.f[i] * pr.f[i] * (std::norm(c[0]) + std::norm(c[2])) +
                                pr.g[i] * pr.g[i] * (std::norm(c[1]) + std::norm(c[3]));
            r.norm_scale = std::max(r.norm_scale, dens);
        }
    };
    scan(-a, true);
    scan(a, true);
    constexpr int kInterior = 33;
    for (int i = 1; i < kInterior; ++i) scan(-a + 2.0 * a * i / kInterior, false);

    r.interior_current_vanishes = r.interior_max < 1e-8 * r.norm_scale;
    const double denom = r.interior_current_vanishes ? r.norm_scale : r.interior_max;
    r.residual = denom > 0.0 ? r.boundary_max / denom : 0.0;
    return r;
}

double phase_condition_residual(const SlabMode& mode, std::span<const double> y_grid) {
    check_mode(mode);
    const double a = mode.params.half_width();
    const auto& ph = mode.phases;
    double worst = 0.0, scale = 0.0;
    for (double y : y_grid) {
        const Spinor lo = assemble_phi(mode, y, -a);
        const Spinor hi = assemble_phi(mode, y, a);
        worst = std::max({worst, std::abs(lo[2] - ph.x() * lo[0]), std::abs(lo[3] - ph.v() * lo[1]),
                          std::abs(hi[2] - ph.y() * hi[0]), std::abs(hi[3] - ph.w() * hi[1])});
        for (int j = 0; j <= 16; ++j) {
            const Spinor s = assemble_phi(mode, y, a * (-1.0 + j / 8.0));
            scale = std::max(scale, std::sqrt(std::norm(s[0]) + std::norm(s[1]) + std::norm(s[2]) + std::norm(s[3])));
        }
    }
    return scale > 0.0 ? worst / scale : 0.0;
}

std::vector<double> default_y_grid(const TransverseMode& t, int points) {
    if (points < 2) throw DomainError("points", "need at least 2");
    std::vector<double> ys(points);
    for (int i = 0; i < points; ++i) ys[i] = t.y_of(-6.0 + 12.0 * i / (points - 1));
    return ys;
}

double half_width_for_root(double k, cplx K) {
    if (!(k > 0.0)) throw DomainError("k", "must be positive");
    double th = std::arg(K);
    if (th <= 0.0) th += 2.0 * kPi;
    return th / (2.0 * k);
}

std::vector<SlabMode> certified_modes(const PhysicalParams& params, const PhaseConfig& phases, cplx K_root,
                                      int landau_level) {
    if (std::abs(std::abs(K_root) - 1.0) > 1e-10) throw DomainError("K_root", "must have unit modulus");
    const NullSpace ns = nullspace_A(params, phases, K_root);
    const TransverseMode tm(landau_level, params.field(), params.px());
    std::vector<SlabMode> out;
    for (const auto& v : ns.basis) out.push_back({params, phases, K_root, v, tm});
    return out;
}

}  // namespace slab
