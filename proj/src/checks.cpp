#include "slab/checks.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "slab/boundary.hpp"
#include "slab/catalog.hpp"

namespace slab {

namespace {

double open_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    double v = u(rng);
    while (v <= lo) v = u(rng);
    return v;
}

}  // namespace

Draw random_draw(const VariantId& variant, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mass_d(0.5, 2.0);
    const double M = mass_d(rng);
    const double eps = open_uniform(rng, M, 3.0 * M);
    const double p = longitudinal_p(eps, M);
    const double k = open_uniform(rng, 0.0, p);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    std::vector<double> gens(generator_count(variant.family));
    for (auto& g : gens) g = phase(rng);
    return {PhysicalParams({M, eps, 0.0, 0.0, 1.0, k}), PhaseConfig::from_generators(variant, gens)};
}

std::vector<std::size_t> best_pairing(std::span<const cplx> a, std::span<const cplx> b) {
    std::vector<std::size_t> perm(b.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> best_perm = perm;
    double best = std::numeric_limits<double>::infinity();
    do {
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size() && worst < best; ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
        if (worst < best) {
            best = worst;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best_perm;
}

double match_multisets(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    if (a.empty()) return 0.0;
    const auto perm = best_pairing(a, b);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
    return worst;
}

double oracle_tolerance(const VariantId& v) {
    return v.family == Family::ThreePhase && v.index >= 5 ? 1e-7 : 1e-8;
}

OracleComparison compare_with_oracle(const VariantId& v, const PhysicalParams& params, const PhaseConfig& phases) {
    OracleComparison out;
    const RootSet rs = closed_form_roots(v, params, phases);
    out.catalog = rs.k_roots();
    out.numeric = numeric_roots(quartic_from_samples(params, phases));
    out.deviation = match_multisets(out.catalog, out.numeric);
    out.modulus_deviation = verify_unit_modulus(rs, 1.0).max_deviation;
    for (const cplx K : out.catalog) {
        const auto S = build_S(params, phases, K);
        out.det_ratio = std::max(out.det_ratio, std::abs(determinant(S.entries)) / S.scale());
    }
    return out;
}

std::vector<OracleStats> oracle_check(std::uint64_t seed, int draws) {
    std::vector<OracleStats> out;
    std::mt19937_64 rng(seed);
    for (const auto& v : all_variants()) {
        OracleStats st;
        st.variant = v;
        const double tol = oracle_tolerance(v);
        for (int i = 0; i < draws; ++i) {
            const Draw d = random_draw(v, rng);
            ++st.draws;
            try {
                const auto c = compare_with_oracle(v, d.params, d.phases);
                st.max_deviation = std::max(st.max_deviation, c.deviation);
                st.max_modulus_deviation = std::max(st.max_modulus_deviation, c.modulus_deviation);
                st.max_det_ratio = std::max(st.max_det_ratio, c.det_ratio);
                if (!(c.deviation < tol)) ++st.failures;
            } catch (const std::exception& e) {
                ++st.failures;
                if (st.first_error.empty()) st.first_error = e.what();
            }
        }
        out.push_back(st);
    }
    return out;
}

}  // namespace slab
