#include "slab/catalog.hpp"

#include <cmath>

#include "slab/errors.hpp"

namespace slab {

namespace {

constexpr double kDenTol = 1e-14;

void guard(cplx den, double ref, const char* expr) {
    if (!std::isfinite(den.real()) || !std::isfinite(den.imag()) || std::abs(den) <= kDenTol * ref)
        throw SingularConfiguration(expr, "closed-form denominator vanishes");
}

cplx checked_div(cplx num, cplx den, double ref, const char* expr) {
    guard(den, ref, expr);
    return num / den;
}

// Phases re-read under the requested variant's pattern; throws if they do not follow it.
PhaseConfig as_variant(const VariantId& v, const PhaseConfig& ph) {
    if (ph.variant() == v) return ph;
    return PhaseConfig(v, ph.rho(), ph.mu(), ph.sigma(), ph.nu());
}

struct Ctx {
    double k, p, al;
    std::vector<cplx> gen;  // Mobius images of the independent phases
    std::vector<cplx> raw;  // the unit values themselves
    double s1, s2;          // k+p and (k+p)^2 reference scales
};

Ctx make_ctx(const VariantId& v, const PhysicalParams& params, const PhaseConfig& phases) {
    if (!(params.k() > 0.0)) throw DomainError("k", "closed forms need k > 0");
    const PhaseConfig ph = as_variant(v, phases);
    Ctx c{params.k(), params.p(), params.alpha(), {}, {}, 0.0, 0.0};
    for (double g : ph.generators()) {
        c.raw.push_back(unit(g));
        c.gen.push_back(mobius_X(c.al, c.raw.back()));
    }
    c.s1 = c.k + c.p;
    c.s2 = c.s1 * c.s1;
    return c;
}

RootSet lambda_pair(const VariantId& v, cplx l1, cplx l2) {
    return {v, RootKind::Lambda, {{l1, 1, RootKind::Lambda}, {l2, 1, RootKind::Lambda}}};
}

RootSet lambda_double(const VariantId& v, cplx l) { return {v, RootKind::Lambda, {{l, 2, RootKind::Lambda}}}; }

RootSet k_plus_minus_one(const VariantId& v) {
    return {v, RootKind::K, {{1.0, 2, RootKind::K}, {-1.0, 2, RootKind::K}}};
}

RootSet k_with_ratio(const VariantId& v, cplx r) {
    const cplx s = std::sqrt(r);
    return {v, RootKind::K, {{1.0, 1, RootKind::K}, {-1.0, 1, RootKind::K}, {s, 1, RootKind::K}, {-s, 1, RootKind::K}}};
}

// (p-k)X^2 + k + p over (k+p)X^2 - k + p
cplx one_phase_ratio(const Ctx& c) {
    const cplx X2 = c.gen[0] * c.gen[0];
    return checked_div((c.p - c.k) * X2 + c.k + c.p, (c.k + c.p) * X2 - c.k + c.p, c.s1, "(k+p)X^2 - k + p");
}

RootSet one_phase(const VariantId& v, const Ctx& c) {
    const double k = c.k, p = c.p, al = c.al;
    const cplx X = c.gen[0];
    const cplx X2 = X * X;
    switch (v.index) {
        case 1:
            return k_plus_minus_one(v);
        case 2: {
            // Written in x = e^{i Delta} and alpha directly.
            const cplx x = c.raw[0];
            const cplx x2 = x * x;
            const double a2 = al * al;
            const cplx A = (x2 - 1.0) * a2 - x2 + 1.0;
            const cplx num = A * k + ((-x2 - 1.0) * a2 + 4.0 * al * x - x2 - 1.0) * p;
            const cplx den = A * k + ((x2 + 1.0) * a2 - 4.0 * al * x + x2 + 1.0) * p;
            return lambda_pair(v, 1.0, -checked_div(num, den, c.s1 * (1.0 + a2), "A k + ((x^2+1)alpha^2 - 4 alpha x + x^2 + 1) p"));
        }
        case 3:
        case 4:
            return lambda_pair(v, 1.0, one_phase_ratio(c));
        case 5:
            return lambda_pair(
                v, 1.0, checked_div((k + p) * X2 - k + p, (p - k) * X2 + k + p, c.s1, "(p-k)X^2 + k + p"));
        case 6:
            return lambda_double(v, 1.0);
        case 7: {
            const double L = k * k / (p * p);
            const cplx W = X2 + 1.0 / X2;
            const cplx t = L * (W.real() - 2.0);
            const cplx r = std::sqrt(t * (4.0 + t)) / 2.0;
            return lambda_pair(v, 1.0 + t / 2.0 + r, 1.0 + t / 2.0 - r);
        }
        case 8:
            return lambda_double(v, one_phase_ratio(c));
    }
    throw DomainError("variant", "bad one-phase index");
}

RootSet two_phase(const VariantId& v, const Ctx& c) {
    const double k = c.k, p = c.p;
    const cplx X = c.gen[0], Y = c.gen[1];
    switch (v.index) {
        case 1:
            return k_plus_minus_one(v);
        case 2: {
            const cplx den = (Y * X * (k - p) - k - p) * (X * (k + p) - Y * (k - p));
            const cplx num = (Y * X * (k + p) - k + p) * (X * (k - p) - Y * (k + p));
            return k_with_ratio(v, checked_div(num, den, c.s2, "[YX(k-p)-k-p][X(k+p)-Y(k-p)]"));
        }
        case 3: {
            const cplx den = (Y * X * (k + p) - k + p) * (X * (k + p) - Y * (k - p));
            const cplx num = (Y * X * (k - p) - k - p) * (X * (k - p) - Y * (k + p));
            return k_with_ratio(v, checked_div(num, den, c.s2, "[YX(k+p)-k+p][X(k+p)-Y(k-p)]"));
        }
        case 4: {
            const cplx lin = (k + p) * X - (k - p) * Y;
            const cplx den = lin * lin;
            guard(den, c.s2, "((k+p)X - (k-p)Y)^2");
            const cplx YX1 = Y * X - 1.0;
            const cplx rad =
                2.0 * k * std::sqrt(YX1 * YX1 * (((Y * Y - 1.0) * X * X - Y * Y + 1.0) * k * k + p * p * (X + Y) * (X + Y)));
            const cplx n = (2.0 * k * k * Y * Y + p * p - k * k) * X * X + Y * (p * p - k * k) * (2.0 * X + Y) + 2.0 * k * k;
            return lambda_pair(v, (rad + n) / den, (-rad + n) / den);
        }
    }
    throw DomainError("variant", "bad two-phase index");
}

RootSet three_phase(const VariantId& v, const Ctx& c) {
    const double k = c.k, p = c.p;
    const cplx X = c.gen[0], Y = c.gen[1], Z = c.gen[2];
    switch (v.index) {
        case 1: {
            const cplx num = ((k - p) * X - (k + p) * Y) * ((k + p) * X - Z * (k - p));
            const cplx den = ((k + p) * X - (k - p) * Y) * ((k - p) * X - Z * (k + p));
            return lambda_pair(v, 1.0, checked_div(num, den, c.s2, "[(k+p)X-(k-p)Y][(k-p)X-Z(k+p)]"));
        }
        case 2: {
            const cplx num = ((k - p) * X - (k + p) * Z) * ((k + p) * X - (k - p) * Y);
            const cplx den = ((k + p) * X - (k - p) * Z) * ((k - p) * X - (k + p) * Y);
            return lambda_pair(v, 1.0, checked_div(num, den, c.s2, "[(k+p)X-(k-p)Z][(k-p)X-(k+p)Y]"));
        }
        case 3: {
            const cplx den = p * X * ((Y - Z) * k - (Y + Z) * p);
            guard(den, c.s2, "pX[(Y-Z)k-(Y+Z)p]");
            const cplx rad = std::sqrt(k * k *
                                       ((X - Z) * (X - Z) * (X - Y) * (X - Y) * k * k +
                                        2.0 * p * p * ((Y + Z) * X - 2.0 * Y * Z) * X * (X - (Y + Z) / 2.0)));
            const cplx n = k * k * (X * X + Y * Z) - (Y + Z) * (k * k - p * p) * X;
            return lambda_pair(v, (rad - n) / den, (-rad - n) / den);
        }
        case 4: {
            const cplx den = ((X * X - 1.0) * k + p * (X * X + 1.0)) * ((Y - Z) * k - p * (Y + Z));
            guard(den, c.s2, "[(X^2-1)k+p(X^2+1)][(Y-Z)k-p(Y+Z)]");
            const cplx rad = 2.0 * k *
                             std::sqrt((X * Z - 1.0) * (X - Z) * (X * Y - 1.0) * (X - Y) * k * k -
                                       (Y * Z * (X * X + 1.0) - X * (Y + Z)) * (1.0 + X * X - X * (Y + Z)) * p * p);
            const cplx n = ((Y + Z) * X * X - 2.0 * (Y * Z + 1.0) * X + Y + Z) * k * k - p * p * (Y + Z) * (X * X + 1.0);
            return lambda_pair(v, (rad + n) / den, (-rad + n) / den);
        }
        case 5: {
            // One root per factor of the factorized determinant.
            const cplx ly = -checked_div(X * (k - p) - Y * (k + p), (k + p) * X - Y * (k - p), c.s1, "(k+p)X - Y(k-p)");
            const cplx lz = -checked_div(X * (k - p) - Z * (k + p), (k + p) * X - Z * (k - p), c.s1, "(k+p)X - Z(k-p)");
            return lambda_pair(v, ly, lz);
        }
        case 6: {
            const cplx den = (Y * (k - p) * X - k - p) * (X * (k + p) - Z * (k - p));
            guard(den, c.s2, "(Y(k-p)X-k-p)(X(k+p)-Z(k-p))");
            const cplx rad = 2.0 * k *
                             std::sqrt(-((Y - Z) * (X * X - 1.0) * (X * Z - 1.0) * (X - Y) * k * k -
                                         (Y * Z * (X * X - 1.0) + (Z - Y) * X) * (X * X + (Z - Y) * X - 1.0) * p * p));
            const cplx n = ((Y - 2.0 * Z) * k * k - Y * p * p) * X * X + (Y * Z + 1.0) * (k * k - p * p) * X +
                           (Z - 2.0 * Y) * k * k - Z * p * p;
            return lambda_pair(v, (rad + n) / den, (-rad + n) / den);
        }
    }
    throw DomainError("variant", "bad three-phase index");
}

RootSet four_phase(const VariantId& v, const Ctx& c) {
    const double k = c.k, p = c.p;
    const cplx X = c.gen[0], Y = c.gen[1], V = c.gen[2], W = c.gen[3];
    const cplx den = ((W - Y) * k + (W + Y) * p) * ((V - X) * k - (V + X) * p);
    guard(den, c.s2, "[(W-Y)k+(W+Y)p][(V-X)k-(V+X)p]");
    const cplx N = ((W - 2.0 * X + Y) * V + (X - 2.0 * Y) * W + X * Y) * k * k - (W + Y) * (V + X) * p * p;
    // (V - Y) + (X - W) keeps the radicand exactly zero on the double-root patterns.
    const cplx D = (((X - Y) * W + X * Y) * V - W * X * Y) * ((V - Y) + (X - W)) * p * p -
                   (X - Y) * (W - X) * (V - Y) * (V - W) * k * k;
    const cplx rad = 2.0 * k * std::sqrt(D);
    return lambda_pair(v, (rad + N) / den, (-rad + N) / den);
}

}  // namespace

RootKind root_kind(const VariantId& v) {
    if (v.family == Family::OnePhase && v.index == 1) return RootKind::K;
    if (v.family == Family::TwoPhase && v.index <= 3) return RootKind::K;
    return RootKind::Lambda;
}

int phase_multiplier(const VariantId& v) { return root_kind(v) == RootKind::K ? 2 : 4; }

std::vector<cplx> RootSet::values() const {
    std::vector<cplx> out;
    for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.value);
    return out;
}

std::vector<cplx> RootSet::k_roots() const {
    std::vector<cplx> out;
    for (const auto& e : entries) {
        if (e.kind == RootKind::K) {
            out.insert(out.end(), e.multiplicity, e.value);
        } else {
            const cplx s = std::sqrt(e.value);
            for (int m = 0; m < e.multiplicity; ++m) {
                out.push_back(s);
                out.push_back(-s);
            }
        }
    }
    return out;
}

int RootSet::total_multiplicity() const {
    int n = 0;
    for (const auto& e : entries) n += e.multiplicity;
    return n;
}

RootSet closed_form_roots(const VariantId& variant, const PhysicalParams& params, const PhaseConfig& phases) {
    const Ctx c = make_ctx(variant, params, phases);
    switch (variant.family) {
        case Family::OnePhase: return one_phase(variant, c);
        case Family::TwoPhase: return two_phase(variant, c);
        case Family::ThreePhase: return three_phase(variant, c);
        case Family::FourPhase: return four_phase(variant, c);
    }
    throw DomainError("variant", "unknown family");
}

Biquadratic biquadratic_coefficients(const VariantId& v, const PhysicalParams& params, const PhaseConfig& phases) {
    if (root_kind(v) != RootKind::Lambda) throw NotApplicable(v.name() + " has K-kind roots");
    const Ctx c = make_ctx(v, params, phases);
    const double k = c.k, p = c.p, al = c.al;
    const cplx X = c.gen[0];
    const cplx X2 = X * X;
    switch (v.family) {
        case Family::OnePhase:
            switch (v.index) {
                case 2: {
                    const cplx x = c.raw[0];
                    const cplx x2 = x * x;
                    const double a2 = al * al;
                    const cplx a = k * x2 * a2 + p * x2 * a2 - k * x2 - k * a2 + p * x2 - 4.0 * p * x * al + p * a2 + k + p;
                    const cplx b = -2.0 * p * x2 * a2 - 2.0 * p * x2 + 8.0 * p * x * al - 2.0 * p * a2 - 2.0 * p;
                    const cplx cc = -k * x2 * a2 + p * x2 * a2 + k * x2 + k * a2 + p * x2 - 4.0 * p * x * al + p * a2 - k + p;
                    return {a, b, cc};
                }
                case 3:
                case 4:
                    return {(k + p) * X2 - k + p, -2.0 * p * (X2 + 1.0), -((k - p) * X2 - k - p)};
                case 5:
                    // specialized from the general form
                    return {-2.0 * p * ((p - k) * X2 + k + p), 4.0 * p * p * (X2 + 1.0), -2.0 * p * ((k + p) * X2 - k + p)};
                case 6: {
                    const cplx s = -((p - k) * X2 + k + p) * ((k + p) * X2 - k + p) / X2;
                    return {s, -2.0 * s, s};
                }
                case 7: {
                    const double L = k * k / (p * p);
                    const cplx W = X2 + 1.0 / X2;
                    return {1.0, -(L * (W - 2.0) + 2.0), 1.0};
                }
                case 8: {
                    const cplx A = X2 * (k + p) - k + p;
                    const cplx B = X2 * (k - p) - k - p;
                    return {A * A, 2.0 * A * B, B * B};
                }
            }
            break;
        case Family::TwoPhase: {
            const cplx Y = c.gen[1];
            const cplx l1 = (k + p) * X - (k - p) * Y;
            const cplx l2 = X * (k - p) - (k + p) * Y;
            const cplx b = -((4.0 * k * k * Y * Y - 2.0 * k * k + 2.0 * p * p) * X2 + (-4.0 * k * k + 4.0 * p * p) * Y * X +
                             (-2.0 * k * k + 2.0 * p * p) * Y * Y + 4.0 * k * k);
            return {l1 * l1, b, l2 * l2};
        }
        case Family::ThreePhase: {
            const cplx Y = c.gen[1], Z = c.gen[2];
            switch (v.index) {
                case 1:
                    return {((k + p) * X - (k - p) * Y) * ((k - p) * X - Z * (k + p)),
                            2.0 * (X * (k * k + p * p) * (Y + Z) - (k * k - p * p) * (X2 + Y * Z)),
                            ((k - p) * X - (k + p) * Y) * ((k + p) * X - Z * (k - p))};
                case 2:
                    return {((k + p) * X - Z * (k - p)) * ((k - p) * X - Y * (k + p)),
                            2.0 * ((k * k + p * p) * (Y + Z) * X - (k * k - p * p) * (X2 + Y * Z)),
                            ((k + p) * X - Y * (k - p)) * ((k - p) * X - Z * (k + p))};
                case 3:
                    return {p * X * (k * (Y - Z) - (Y + Z) * p),
                            2.0 * ((X2 + Y * Z) * k * k - (k * k - p * p) * (Y + Z) * X),
                            -p * X * (k * (Y - Z) + (Y + Z) * p)};
                case 4:
                    return {((X2 - 1.0) * k + p * (X2 + 1.0)) * ((Y - Z) * k - p * (Y + Z)),
                            -(((2.0 * (Y + Z) * X2 - 4.0 * (Y * Z + 1.0) * X + 2.0 * (Y + Z)) * k * k) -
                              2.0 * p * p * (X2 + 1.0) * (Y + Z)),
                            ((X2 - 1.0) * k - (X2 + 1.0) * p) * ((Y - Z) * k + p * (Y + Z))};
                case 5: {
                    const cplx A1 = (k + p) * X - Y * (k - p), B1 = X * (k - p) - Y * (k + p);
                    const cplx A2 = (k + p) * X - Z * (k - p), B2 = X * (k - p) - Z * (k + p);
                    return {A1 * A2, A1 * B2 + A2 * B1, B1 * B2};
                }
                case 6: {
                    // specialized from the general form
                    const double k2 = k * k, p2 = p * p;
                    const cplx a = (X * (k + p) - Z * (k - p)) * (X * Y * (k - p) - k - p) / X;
                    const cplx b = 2.0 *
                                   (-X2 * Y * k2 + X2 * Y * p2 + 2.0 * X2 * Z * k2 - X * Y * Z * k2 + X * Y * Z * p2 -
                                    X * k2 + X * p2 + 2.0 * Y * k2 - Z * k2 + Z * p2) /
                                   X;
                    const cplx cc = (X * (k - p) - Z * (k + p)) * (X * Y * (k + p) - k + p) / X;
                    return {a, b, cc};
                }
            }
            break;
        }
        case Family::FourPhase: {
            const cplx Y = c.gen[1], V = c.gen[2], W = c.gen[3];
            const cplx a = ((V - X) * k - p * (V + X)) * ((W - Y) * k + p * (W + Y));
            const cplx b = 2.0 * (((2.0 * X - W - Y) * V - (X - 2.0 * Y) * W - X * Y) * k * k + p * p * (W + Y) * (V + X));
            const cplx cc = ((W - Y) * k - p * (W + Y)) * ((V - X) * k + p * (V + X));
            return {a, b, cc};
        }
    }
    throw NotApplicable("no bi-quadratic for " + v.name());
}

ModulusReport verify_unit_modulus(const RootSet& roots, double tol) {
    ModulusReport r;
    for (const auto& e : roots.entries) r.max_deviation = std::max(r.max_deviation, std::abs(std::abs(e.value) - 1.0));
    r.pass = r.max_deviation < tol;
    return r;
}

VietaReport vieta_check(const VariantId& variant, const PhysicalParams& params, const PhaseConfig& phases, double tol) {
    if (root_kind(variant) != RootKind::Lambda) throw NotApplicable(variant.name() + " has K-kind roots");
    const auto roots = closed_form_roots(variant, params, phases).values();
    const auto q = biquadratic_coefficients(variant, params, phases);
    guard(q.a, std::abs(q.a) + std::abs(q.b) + std::abs(q.c), "a");
    VietaReport r;
    r.product = roots.at(0) * roots.at(1);
    r.ratio = q.c / q.a;
    r.deviation = std::abs(r.product - r.ratio);
    r.pass = r.deviation < tol;
    return r;
}

}  // namespace slab
