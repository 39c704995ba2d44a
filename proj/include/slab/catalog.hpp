#pragma once

#include <vector>

#include "slab/core.hpp"

namespace slab {

enum class RootKind { K, Lambda };

/// K-kind for OnePhase(1), TwoPhase(1..3); Lambda-kind otherwise.
RootKind root_kind(const VariantId& v);
/// 2 for K-kind (e^{2ika} = K), 4 for Lambda-kind (e^{4ika} = Lambda).
int phase_multiplier(const VariantId& v);

struct RootEntry {
    cplx value;
    int multiplicity = 1;
    RootKind kind = RootKind::K;
};

struct RootSet {
    VariantId variant;
    RootKind kind = RootKind::K;
    std::vector<RootEntry> entries;

    /// Entry values repeated by multiplicity.
    std::vector<cplx> values() const;
    /// The four K-roots, Lambda entries expanded to +-sqrt(Lambda).
    std::vector<cplx> k_roots() const;
    int total_multiplicity() const;
};

/// Closed-form roots of det S = 0. Throws SingularConfiguration on a vanishing denominator,
/// DomainError if the phases do not follow the variant's pattern or k is not in (0, p) u (p, inf).
RootSet closed_form_roots(const VariantId& variant, const PhysicalParams& params, const PhaseConfig& phases);

/// a Lambda^2 + b Lambda + c = 0 for a Lambda-kind variant.
struct Biquadratic {
    cplx a, b, c;
};
Biquadratic biquadratic_coefficients(const VariantId& variant, const PhysicalParams& params, const PhaseConfig& phases);

struct ModulusReport {
    double max_deviation = 0.0;
    bool pass = true;
};
ModulusReport verify_unit_modulus(const RootSet& roots, double tol = 1e-10);

struct VietaReport {
    cplx product;  // Lambda1 Lambda2
    cplx ratio;    // c / a
    double deviation = 0.0;
    bool pass = true;
};
/// Throws NotApplicable for K-kind variants.
VietaReport vieta_check(const VariantId& variant, const PhysicalParams& params, const PhaseConfig& phases,
                        double tol = 1e-10);

}  // namespace slab
