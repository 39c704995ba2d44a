#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "slab/core.hpp"

namespace slab {

struct Draw {
    PhysicalParams params;
    PhaseConfig phases;
};

/// M in [0.5, 2], eps in (M, 3M], k in (0, p), phases uniform on [0, 2pi).
Draw random_draw(const VariantId& variant, std::mt19937_64& rng);

/// Min over pairings of the max pairwise distance; +inf for different sizes.
double match_multisets(std::span<const cplx> a, std::span<const cplx> b);
/// The pairing behind match_multisets: a[i] pairs with b[perm[i]]. Sizes must agree.
std::vector<std::size_t> best_pairing(std::span<const cplx> a, std::span<const cplx> b);

/// 1e-8, or 1e-7 for ThreePhase(5) and ThreePhase(6).
double oracle_tolerance(const VariantId& v);

struct OracleComparison {
    std::vector<cplx> catalog;  // K-roots from the closed forms
    std::vector<cplx> numeric;  // K-roots of the sampled quartic
    double deviation = 0.0;
    double modulus_deviation = 0.0;
    double det_ratio = 0.0;  // max |det S(K)| / row scale over catalog roots
};

OracleComparison compare_with_oracle(const VariantId& v, const PhysicalParams& params, const PhaseConfig& phases);

struct OracleStats {
    VariantId variant;
    int draws = 0;
    int failures = 0;
    double max_deviation = 0.0;
    double max_modulus_deviation = 0.0;
    double max_det_ratio = 0.0;
    std::string first_error;
};

/// Randomized catalog/oracle comparison for every variant, deterministic in `seed`.
std::vector<OracleStats> oracle_check(std::uint64_t seed, int draws);

}  // namespace slab
