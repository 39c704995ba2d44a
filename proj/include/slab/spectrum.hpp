#pragma once

#include <optional>
#include <utility>
#include <string>
#include <variant>
#include <vector>

#include "slab/catalog.hpp"
#include "slab/core.hpp"

namespace slab {

struct FixedEpsilon {
    double energy;
};
struct LandauLevel {
    int level;
};
using Parameterization = std::variant<FixedEpsilon, LandauLevel>;

struct QuantizationProblem {
    QuantizationProblem(VariantId v, PhaseConfig ph) : variant(v), phases(std::move(ph)) {}

    VariantId variant;
    PhaseConfig phases;
    double mass = 1.0;
    double field = 0.0;
    double px = 0.0;
    Parameterization parameterization = LandauLevel{0};
    double half_width = 1.0;
    double k_min = 0.0;
    double k_max = 0.0;
    /// Catalog entry whose branch is followed from k_min by continuity; empty tracks every entry.
    std::optional<int> root_selector;
};

/// Physical parameters at momentum k (p tied to k under LandauLevel).
PhysicalParams params_at(const QuantizationProblem& problem, double k);
void validate(const QuantizationProblem& problem);

struct SpectrumRow {
    long branch = 0;
    int root_index = 0;  // catalog entry equal to `root` at this k
    double k = 0.0;
    double energy = 0.0;
    cplx root;
    double residual = 0.0;
};

struct SpectrumTable {
    std::vector<SpectrumRow> rows;  // ascending k
    std::vector<double> excluded;   // k where the tracked root is singular or discontinuous
};

/// Solves m a k - arg(root(k)) = 2 pi n on the window.
SpectrumTable allowed_k(const QuantizationProblem& problem, int grid_points = 256);

enum class SweepAxis { HalfWidth, Field };

struct SweepPoint {
    double value = 0.0;
    SpectrumTable table;
    std::string error;  // empty on success
};

std::vector<SweepPoint> spectrum_sweep(const QuantizationProblem& problem, SweepAxis axis,
                                       const std::vector<double>& values, int grid_points = 256);

}  // namespace slab
