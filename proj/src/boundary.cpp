#include "slab/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "slab/errors.hpp"

namespace slab {

namespace {

constexpr double kRankTol = 1e-10;

}  // namespace

BoundaryMatrix build_S(const PhysicalParams& params, const PhaseConfig& phases, cplx K) {
    const double al = params.alpha();
    const double be = params.beta();
    const double k = params.k();
    const double p = params.p();
    const cplx x = phases.x(), y = phases.y(), v = phases.v(), w = phases.w();

    Matrix4c s{};
    s[0] = {al - x, be - x, (al - x) * K, (be - x) * K};
    s[1] = {(al - y) * K, (be - y) * K, al - y, be - y};
    s[2] = {(al - v) * (k + p), (be - v) * (k - p), -(al - v) * (k - p) * K, -(be - v) * (k + p) * K};
    s[3] = {(al - w) * (k + p) * K, (be - w) * (k - p) * K, -(al - w) * (k - p), -(be - w) * (k + p)};
    return {s, params, phases, K};
}

cplx det_S(const PhysicalParams& params, const PhaseConfig& phases, cplx K) {
    return determinant(build_S(params, phases, K).entries);
}

Matrix4l build_S_extended(const PhysicalParams& params, const PhaseConfig& phases, lcplx K) {
    using L = long double;
    const L M = params.mass(), e = params.energy();
    const L p = std::sqrt((e - M) * (e + M));
    const L al = (e + p) / M;
    const L be = 1.0L / al;
    const L k = params.k();
    auto u = [](double a) { return std::polar<L>(1.0L, static_cast<L>(a)); };
    const lcplx x = u(phases.rho()), y = u(phases.mu()), v = u(phases.sigma()), w = u(phases.nu());

    Matrix4l s{};
    s[0] = {al - x, be - x, (al - x) * K, (be - x) * K};
    s[1] = {(al - y) * K, (be - y) * K, al - y, be - y};
    s[2] = {(al - v) * (k + p), (be - v) * (k - p), -(al - v) * (k - p) * K, -(be - v) * (k + p) * K};
    s[3] = {(al - w) * (k + p) * K, (be - w) * (k - p) * K, -(al - w) * (k - p), -(be - w) * (k + p)};
    return s;
}

lcplx QuarticPoly::operator()(lcplx K) const {
    lcplx r = c[4];
    for (int i = 3; i >= 0; --i) r = r * K + c[i];
    return r;
}

lcplx QuarticPoly::derivative(lcplx K, int d) const {
    lcplx r = 0.0L;
    for (int i = 4; i >= d; --i) {
        long double f = 1.0L;
        for (int j = 0; j < d; ++j) f *= i - j;
        r = r * K + f * c[i];
    }
    return r;
}

double QuarticPoly::norm() const {
    long double n = 0.0L;
    for (const auto& e : c) n = std::max(n, std::abs(e));
    return static_cast<double>(n);
}

std::array<cplx, 5> QuarticPoly::coefficients() const {
    std::array<cplx, 5> out;
    for (int i = 0; i < 5; ++i) out[i] = cplx(c[i]);
    return out;
}

QuarticPoly quartic_from_samples(const PhysicalParams& params, const PhaseConfig& phases) {
    std::vector<std::vector<lcplx>> vand(5, std::vector<lcplx>(5));
    std::vector<lcplx> rhs(5);
    for (int i = 0; i < 5; ++i) {
        const lcplx Ks(kSamplePoints[i]);
        lcplx pw = 1.0L;
        for (int j = 0; j < 5; ++j, pw *= Ks) vand[i][j] = pw;
        rhs[i] = determinant(build_S_extended(params, phases, Ks));
    }
    const auto sol = solve(vand, rhs);
    QuarticPoly q;
    std::copy(sol.begin(), sol.end(), q.c.begin());

    const auto cert = build_S(params, phases, kCertifyPoint);
    const double miss = static_cast<double>(
        std::abs(q(lcplx(kCertifyPoint)) - determinant(build_S_extended(params, phases, lcplx(kCertifyPoint)))));
    if (!(miss <= 1e-9 * cert.scale()))
        throw ConsistencyError("det S is not a quartic in K: certification residual " + std::to_string(miss));
    return q;
}

namespace {

// Newton polish on the d-th derivative, keeping the best iterate.
lcplx polish(const QuarticPoly& q, lcplx z, int d, int iters) {
    lcplx best = z;
    long double best_val = std::abs(q.derivative(z, d));
    for (int it = 0; it < iters && best_val > 0.0L; ++it) {
        const lcplx df = q.derivative(best, d + 1);
        if (df == lcplx{}) break;
        const lcplx next = best - q.derivative(best, d) / df;
        const long double val = std::abs(q.derivative(next, d));
        if (!(val < best_val)) break;
        best = next;
        best_val = val;
    }
    return best;
}

}  // namespace

std::vector<cplx> numeric_roots(const QuarticPoly& q) {
    using L = long double;
    const L qn = q.norm();
    if (!(qn > 0.0L)) throw DegenerateError("det S vanishes identically in K");
    int deg = 4;
    while (deg > 0 && std::abs(q.c[deg]) < 1e-12L * qn) --deg;
    if (deg == 0) return {};

    QuarticPoly trimmed;
    std::copy(q.c.begin(), q.c.begin() + deg + 1, trimmed.c.begin());
    auto roots = companion_roots({trimmed.c.begin(), trimmed.c.begin() + deg + 1});

    // A root of multiplicity m splits by ~(noise/curvature)^(1/m); merge such clusters
    // and refine on the (m-1)-th derivative.
    const L noise = 64.0L * std::numeric_limits<L>::epsilon();
    auto radius = [&](lcplx m, int mult) {
        L mag = 0.0L;
        for (int i = 0; i <= deg; ++i) mag += std::abs(trimmed.c[i]) * std::pow(std::abs(m), static_cast<L>(i));
        L fact = 1.0L;
        for (int j = 2; j <= mult; ++j) fact *= j;
        const L curv = std::abs(trimmed.derivative(m, mult)) / fact;
        if (!(curv > 0.0L)) return 0.0L;
        return 2.0L * std::pow(noise * mag / curv, 1.0L / mult);
    };

    std::vector<int> cluster(roots.size(), -1);
    std::vector<std::vector<int>> groups;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (cluster[i] >= 0) continue;
        cluster[i] = static_cast<int>(groups.size());
        groups.push_back({static_cast<int>(i)});
        bool grew = true;
        while (grew) {
            grew = false;
            auto& g = groups.back();
            lcplx mean = 0.0L;
            for (int m : g) mean += roots[m];
            mean /= static_cast<L>(g.size());
            const L rad = radius(mean, static_cast<int>(g.size()) + 1);
            for (std::size_t j = 0; j < roots.size(); ++j) {
                if (cluster[j] >= 0 || !(std::abs(roots[j] - mean) < rad)) continue;
                cluster[j] = cluster[i];
                g.push_back(static_cast<int>(j));
                grew = true;
                break;
            }
        }
    }

    std::vector<cplx> out;
    for (const auto& g : groups) {
        lcplx mean = 0.0L;
        for (int m : g) mean += roots[m];
        mean /= static_cast<L>(g.size());
        const lcplx z = g.size() == 1 ? polish(trimmed, roots[g[0]], 0, 4)
                                      : polish(trimmed, mean, static_cast<int>(g.size()) - 1, 4);
        out.insert(out.end(), g.size(), cplx(z));
    }
    return out;
}

int rank_S(const PhysicalParams& params, const PhaseConfig& phases, cplx K) {
    const auto s = svd(build_S(params, phases, K).entries);
    if (!(s.sigma[0] > 0.0)) return 0;
    return static_cast<int>(std::count_if(s.sigma.begin(), s.sigma.end(),
                                          [&](double v) { return v > kRankTol * s.sigma[0]; }));
}

NullSpace nullspace_A(const PhysicalParams& params, const PhaseConfig& phases, cplx K_root) {
    const auto S = build_S(params, phases, K_root);
    const double det = std::abs(determinant(S.entries));
    if (!(det < 1e-8 * S.scale())) throw NoNullSpace("K is not a root of det S (|det| = " + std::to_string(det) + ")");

    const auto s = svd(S.entries);
    NullSpace ns;
    ns.rank = static_cast<int>(
        std::count_if(s.sigma.begin(), s.sigma.end(), [&](double v) { return v > kRankTol * s.sigma[0]; }));
    const int dim = std::max(1, 4 - ns.rank);
    for (int i = 4 - dim; i < 4; ++i) {
        CoefficientVector cv{s.right[i]};
        const double r = norm2(multiply(S.entries, cv.A)) / s.sigma[0];
        ns.max_residual = std::max(ns.max_residual, r);
        ns.basis.push_back(cv);
    }
    if (!(ns.max_residual < 1e-8)) throw NoNullSpace("null-space residual too large at K");
    return ns;
}

}  // namespace slab
