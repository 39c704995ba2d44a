#include "slab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "slab/errors.hpp"
#include "slab/transverse.hpp"

namespace slab {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

double wrap(double d) {
    d = std::remainder(d, kTwoPi);
    return d <= -kPi ? d + kTwoPi : d;
}

struct Sample {
    double k;
    std::vector<cplx> vals;
    int sel;
    double theta;
    cplx value() const { return vals[sel]; }
};

int nearest(const std::vector<cplx>& vals, cplx target) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(vals.size()); ++i)
        if (std::abs(vals[i] - target) < std::abs(vals[best] - target)) best = i;
    return best;
}

class Tracker {
public:
    Tracker(const QuantizationProblem& pr, int selector) : pr_(pr), selector_(selector) {}

    std::optional<std::vector<cplx>> eval(double k) const {
        try {
            const auto rs = closed_form_roots(pr_.variant, params_at(pr_, k), pr_.phases);
            std::vector<cplx> v;
            for (const auto& e : rs.entries) v.push_back(e.value);
            return v;
        } catch (const SingularConfiguration&) {
            return std::nullopt;
        } catch (const DomainError&) {
            return std::nullopt;
        }
    }

    Sample start(double k, std::vector<cplx> vals) const {
        const cplx v = vals.at(selector_);
        return {k, std::move(vals), selector_, std::arg(v)};
    }

    // Continues `prev` to `next`, inserting midpoints while the argument jumps by more than pi/2.
    // Returns false on a discontinuity; `where` then holds its location.
    bool extend(std::vector<Sample>& seg, double k_new, const std::vector<cplx>& vals, int depth, double& where) const {
        const Sample& prev = seg.back();
        const int j = nearest(vals, prev.value());
        const double d = wrap(std::arg(vals[j]) - std::arg(prev.value()));
        if (std::abs(d) <= kPi / 2) {
            seg.push_back({k_new, vals, j, prev.theta + d});
            return true;
        }
        const double mid = 0.5 * (prev.k + k_new);
        if (depth >= 48 || !(mid > prev.k && mid < k_new)) {
            where = mid;
            return false;
        }
        const auto vm = eval(mid);
        if (!vm) {
            where = mid;
            return false;
        }
        if (!extend(seg, mid, *vm, depth + 1, where)) return false;
        return extend(seg, k_new, vals, depth + 1, where);
    }

    // Tracked root and its continued argument at k inside [a.k, b.k].
    std::optional<std::pair<cplx, double>> at(const Sample& a, double k) const {
        const auto v = eval(k);
        if (!v) return std::nullopt;
        const int j = nearest(*v, a.value());
        return std::make_pair((*v)[j], a.theta + wrap(std::arg((*v)[j]) - std::arg(a.value())));
    }

private:
    const QuantizationProblem& pr_;
    int selector_;
};

void solve_segment(const QuantizationProblem& pr, const Tracker& tr, const std::vector<Sample>& seg, int selector,
                   SpectrumTable& out) {
    const double ma = phase_multiplier(pr.variant) * pr.half_width;
    auto F = [&](const Sample& s) { return ma * s.k - s.theta; };

    auto emit = [&](double k, cplx root, long n) {
        const double res = std::abs(std::polar(1.0, ma * k) - root);
        if (!(res < 1e-9)) return;
        // entry labels can swap along k, so report the label at this k
        const auto vals = tr.eval(k);
        const int idx = vals ? nearest(*vals, root) : selector;
        out.rows.push_back({n, idx, k, params_at(pr, k).energy(), root, res});
    };

    for (std::size_t i = 0; i < seg.size(); ++i) {
        const Sample& a = seg[i];
        const double fa = F(a);
        const long na = std::lround(fa / kTwoPi);
        if (fa == kTwoPi * na) emit(a.k, a.value(), na);
        if (i + 1 == seg.size()) break;

        const Sample& b = seg[i + 1];
        const double fb = F(b);
        const long lo = static_cast<long>(std::ceil(std::min(fa, fb) / kTwoPi));
        const long hi = static_cast<long>(std::floor(std::max(fa, fb) / kTwoPi));
        for (long n = lo; n <= hi; ++n) {
            const double target = kTwoPi * n;
            double ga = fa - target, gb = fb - target;
            if (ga == 0.0 || gb == 0.0 || (ga > 0) == (gb > 0)) continue;
            double kl = a.k, kr = b.k;
            cplx root = a.value();
            bool ok = true;
            for (int it = 0; it < 200; ++it) {
                const double km = 0.5 * (kl + kr);
                if (!(km > kl && km < kr)) break;
                const auto r = tr.at(a, km);
                if (!r) {
                    ok = false;
                    break;
                }
                const double gm = ma * km - r->second - target;
                root = r->first;
                if (gm == 0.0) {
                    kl = kr = km;
                    break;
                }
                if ((gm > 0) == (ga > 0)) {
                    kl = km;
                    ga = gm;
                } else {
                    kr = km;
                }
            }
            if (!ok) continue;
            const double ks = 0.5 * (kl + kr);
            const auto r = tr.at(a, ks);
            if (r) emit(ks, r->first, n);
        }
    }
}

SpectrumTable track_one(const QuantizationProblem& pr, int selector, int grid_points) {
    const Tracker tr(pr, selector);
    SpectrumTable out;
    std::vector<Sample> seg;
    auto flush = [&] {
        if (!seg.empty()) solve_segment(pr, tr, seg, selector, out);
        seg.clear();
    };
    for (int j = 0; j < grid_points; ++j) {
        const double k = j + 1 == grid_points ? pr.k_max : pr.k_min + (pr.k_max - pr.k_min) * j / (grid_points - 1);
        auto vals = tr.eval(k);
        if (!vals) {
            out.excluded.push_back(k);
            flush();
            continue;
        }
        if (seg.empty()) {
            seg.push_back(tr.start(k, std::move(*vals)));
            continue;
        }
        double where = 0.0;
        if (!tr.extend(seg, k, *vals, 0, where)) {
            out.excluded.push_back(where);
            flush();
            seg.push_back(tr.start(k, std::move(*vals)));
        }
    }
    flush();
    return out;
}

}  // namespace

PhysicalParams params_at(const QuantizationProblem& pr, double k) {
    ParamSpec s{pr.mass, 0.0, pr.px, pr.field, pr.half_width, k};
    if (const auto* fe = std::get_if<FixedEpsilon>(&pr.parameterization))
        s.energy = fe->energy;
    else
        s.energy = energy_from_landau(pr.mass, k, std::get<LandauLevel>(pr.parameterization).level, pr.field);
    return PhysicalParams(s);
}

void validate(const QuantizationProblem& pr) {
    if (!(pr.mass > 0.0)) throw DomainError("mass", "must be positive");
    if (!(pr.field >= 0.0) || !std::isfinite(pr.field)) throw DomainError("field", "must be >= 0");
    if (!(pr.half_width > 0.0) || !std::isfinite(pr.half_width)) throw DomainError("half_width", "must be positive");
    if (!(pr.k_min > 0.0)) throw DomainError("k_min", "window must start above k = 0");
    if (!(pr.k_max > pr.k_min) || !std::isfinite(pr.k_max)) throw DomainError("k_max", "window is empty");
    if (pr.variant != pr.phases.variant()) PhaseConfig(pr.variant, pr.phases.rho(), pr.phases.mu(), pr.phases.sigma(), pr.phases.nu());
    if (const auto* fe = std::get_if<FixedEpsilon>(&pr.parameterization)) {
        const double p = longitudinal_p(fe->energy, pr.mass);
        if (pr.k_max > p) throw DomainError("k_max", "exceeds p = sqrt(eps^2 - M^2) under fixed energy");
    } else {
        const int n = std::get<LandauLevel>(pr.parameterization).level;
        if (n < 0 || n > kMaxLandauIndex) throw DomainError("landau_level", "must be in 0..64");
    }
    if (pr.root_selector) {
        const auto rs = closed_form_roots(pr.variant, params_at(pr, pr.k_max), pr.phases);
        if (*pr.root_selector < 0 || *pr.root_selector >= static_cast<int>(rs.entries.size()))
            throw DomainError("root_selector", "out of range for " + pr.variant.name());
    }
}

SpectrumTable allowed_k(const QuantizationProblem& pr, int grid_points) {
    if (grid_points < 64) throw DomainError("grid_points", "must be >= 64");
    validate(pr);

    std::vector<int> selectors;
    if (pr.root_selector) {
        selectors.push_back(*pr.root_selector);
    } else {
        // Entry count is fixed per variant; probe any regular point.
        std::size_t count = 0;
        for (int j = 0; j <= 16 && count == 0; ++j) {
            try {
                count = closed_form_roots(pr.variant, params_at(pr, pr.k_max - (pr.k_max - pr.k_min) * j / 16.0),
                                          pr.phases)
                            .entries.size();
            } catch (const SingularConfiguration&) {
            }
        }
        for (std::size_t i = 0; i < count; ++i) selectors.push_back(static_cast<int>(i));
    }

    SpectrumTable all;
    for (int sel : selectors) {
        auto t = track_one(pr, sel, grid_points);
        all.rows.insert(all.rows.end(), t.rows.begin(), t.rows.end());
        all.excluded.insert(all.excluded.end(), t.excluded.begin(), t.excluded.end());
    }
    std::stable_sort(all.rows.begin(), all.rows.end(), [](const SpectrumRow& a, const SpectrumRow& b) { return a.k < b.k; });
    std::vector<SpectrumRow> dedup;
    for (const auto& r : all.rows)
        if (dedup.empty() || r.k - dedup.back().k > 1e-10) dedup.push_back(r);
    all.rows = std::move(dedup);
    std::sort(all.excluded.begin(), all.excluded.end());
    all.excluded.erase(std::unique(all.excluded.begin(), all.excluded.end()), all.excluded.end());
    return all;
}

std::vector<SweepPoint> spectrum_sweep(const QuantizationProblem& problem, SweepAxis axis,
                                       const std::vector<double>& values, int grid_points) {
    std::vector<SweepPoint> out;
    out.reserve(values.size());
    for (double v : values) {
        QuantizationProblem pr = problem;
        (axis == SweepAxis::HalfWidth ? pr.half_width : pr.field) = v;
        SweepPoint pt{v, {}, {}};
        try {
            pt.table = allowed_k(pr, grid_points);
        } catch (const std::exception& e) {
            pt.error = e.what();
        }
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace slab
