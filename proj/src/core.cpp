#include "slab/core.hpp"

#include <cmath>
#include <optional>

#include "slab/errors.hpp"

namespace slab {

double longitudinal_p(double energy, double mass) {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("mass", "must be positive and finite");
    if (!std::isfinite(energy)) throw DomainError("energy", "must be finite");
    if (energy < mass) throw DomainError("energy", "below the mass threshold (evanescent regime)");
    return std::sqrt((energy - mass) * (energy + mass));
}

Polarization polarization_ratios(double energy, double mass) {
    const double p = longitudinal_p(energy, mass);
    const double alpha = (energy + p) / mass;
    return {alpha, 1.0 / alpha};
}

cplx mobius_X(double alpha, cplx x) {
    if (!(alpha > 1.0)) throw DomainError("alpha", "Mobius map needs alpha > 1");
    return (alpha - x) / (1.0 - alpha * x);
}

double reduce_angle(double angle) {
    if (!std::isfinite(angle)) throw DomainError("phase", "must be finite");
    double r = std::fmod(angle, 2.0 * kPi);
    if (r < 0.0) r += 2.0 * kPi;
    if (r >= 2.0 * kPi) r = 0.0;
    return r;
}

PhysicalParams::PhysicalParams(const ParamSpec& s)
    : mass_(s.mass), energy_(s.energy), px_(s.px), field_(s.field), half_width_(s.half_width), k_(s.k) {
    if (!std::isfinite(px_)) throw DomainError("px", "must be finite");
    if (!(field_ >= 0.0) || !std::isfinite(field_)) throw DomainError("field", "must be >= 0 and finite");
    if (!(half_width_ > 0.0) || !std::isfinite(half_width_)) throw DomainError("half_width", "must be positive");
    if (!std::isfinite(k_)) throw DomainError("k", "must be finite");
    p_ = longitudinal_p(energy_, mass_);
    if (!(energy_ > mass_)) throw DomainError("energy", "eps = M gives p = 0, which is not modeled");
    alpha_ = (energy_ + p_) / mass_;
}

PhysicalParams PhysicalParams::with_k(double k) const {
    ParamSpec s = spec();
    s.k = k;
    return PhysicalParams(s);
}

PhysicalParams PhysicalParams::with_half_width(double a) const {
    ParamSpec s = spec();
    s.half_width = a;
    return PhysicalParams(s);
}

ParamSpec PhysicalParams::spec() const { return {mass_, energy_, px_, field_, half_width_, k_}; }

namespace {

constexpr std::string_view family_name(Family f) {
    switch (f) {
        case Family::OnePhase: return "OnePhase";
        case Family::TwoPhase: return "TwoPhase";
        case Family::ThreePhase: return "ThreePhase";
        case Family::FourPhase: return "FourPhase";
    }
    return "?";
}

// slot = sign * generator[index]
struct Slot {
    int gen;
    int sign;
};
using Pattern = std::array<Slot, 4>;

constexpr std::array<Pattern, 8> kOne = {{
    {{{0, 1}, {0, 1}, {0, 1}, {0, 1}}},
    {{{0, -1}, {0, 1}, {0, 1}, {0, 1}}},
    {{{0, 1}, {0, -1}, {0, 1}, {0, 1}}},
    {{{0, 1}, {0, 1}, {0, -1}, {0, 1}}},
    {{{0, 1}, {0, 1}, {0, 1}, {0, -1}}},
    {{{0, 1}, {0, 1}, {0, -1}, {0, -1}}},
    {{{0, 1}, {0, -1}, {0, 1}, {0, -1}}},
    {{{0, 1}, {0, -1}, {0, -1}, {0, 1}}},
}};

constexpr std::array<Pattern, 4> kTwo = {{
    {{{0, 1}, {0, 1}, {1, 1}, {1, 1}}},
    {{{0, 1}, {0, 1}, {1, 1}, {1, -1}}},
    {{{0, 1}, {0, -1}, {1, 1}, {1, 1}}},
    {{{0, 1}, {0, -1}, {1, 1}, {1, -1}}},
}};

constexpr std::array<Pattern, 6> kThree = {{
    {{{0, 1}, {0, 1}, {1, 1}, {2, 1}}},
    {{{1, 1}, {2, 1}, {0, 1}, {0, 1}}},
    {{{0, 1}, {1, 1}, {0, 1}, {2, 1}}},
    {{{0, 1}, {1, 1}, {0, -1}, {2, 1}}},
    {{{0, 1}, {1, 1}, {2, 1}, {0, 1}}},
    {{{0, 1}, {1, 1}, {2, 1}, {0, -1}}},
}};

constexpr Pattern kFour = {{{0, 1}, {1, 1}, {2, 1}, {3, 1}}};

const Pattern& pattern_of(const VariantId& v) {
    switch (v.family) {
        case Family::OnePhase: return kOne.at(v.index - 1);
        case Family::TwoPhase: return kTwo.at(v.index - 1);
        case Family::ThreePhase: return kThree.at(v.index - 1);
        case Family::FourPhase: return kFour;
    }
    return kFour;
}

void check_index(const VariantId& v) {
    const int n = VariantId::family_size(v.family);
    if (v.index < 1 || v.index > n)
        throw DomainError("variant", std::string(family_name(v.family)) + " index out of range 1.." + std::to_string(n));
}

}  // namespace

int VariantId::family_size(Family f) {
    switch (f) {
        case Family::OnePhase: return 8;
        case Family::TwoPhase: return 4;
        case Family::ThreePhase: return 6;
        case Family::FourPhase: return 1;
    }
    return 0;
}

int generator_count(Family f) {
    switch (f) {
        case Family::OnePhase: return 1;
        case Family::TwoPhase: return 2;
        case Family::ThreePhase: return 3;
        case Family::FourPhase: return 4;
    }
    return 0;
}

std::string VariantId::name() const {
    std::string s(family_name(family));
    if (family != Family::FourPhase) s += "(" + std::to_string(index) + ")";
    return s;
}

VariantId VariantId::parse(std::string_view text) {
    for (Family f : {Family::OnePhase, Family::TwoPhase, Family::ThreePhase, Family::FourPhase}) {
        const auto fam = family_name(f);
        if (text.substr(0, fam.size()) != fam) continue;
        auto rest = text.substr(fam.size());
        if (f == Family::FourPhase) {
            if (rest.empty() || rest == "(1)") return {f, 1};
            break;
        }
        if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')') break;
        const auto digits = rest.substr(1, rest.size() - 2);
        int idx = 0;
        for (char c : digits) {
            if (c < '0' || c > '9') throw DomainError("variant", "bad index in '" + std::string(text) + "'");
            idx = idx * 10 + (c - '0');
            if (idx > 100) break;
        }
        VariantId v{f, idx};
        check_index(v);
        return v;
    }
    throw DomainError("variant", "unknown variant '" + std::string(text) + "'");
}

std::vector<VariantId> all_variants() {
    std::vector<VariantId> out;
    for (Family f : {Family::OnePhase, Family::TwoPhase, Family::ThreePhase, Family::FourPhase})
        for (int i = 1; i <= VariantId::family_size(f); ++i) out.push_back({f, i});
    return out;
}

PhaseConfig::PhaseConfig(VariantId variant, double rho, double mu, double sigma, double nu) : variant_(variant) {
    check_index(variant_);
    angles_ = {reduce_angle(rho), reduce_angle(mu), reduce_angle(sigma), reduce_angle(nu)};
    if (variant_.family == Family::FourPhase) return;

    const auto gens = generators();
    const Pattern& pat = pattern_of(variant_);
    static constexpr const char* kSlot[4] = {"rho", "mu", "sigma", "nu"};
    for (int s = 0; s < 4; ++s) {
        const cplx want = unit(pat[s].sign * gens[pat[s].gen]);
        if (std::abs(unit(angles_[s]) - want) > 1e-12)
            throw DomainError(kSlot[s], "phases do not follow the " + variant_.name() + " pattern");
    }
}

PhaseConfig PhaseConfig::from_generators(VariantId variant, const std::vector<double>& gens) {
    check_index(variant);
    if (static_cast<int>(gens.size()) != generator_count(variant.family))
        throw DomainError("phases", variant.name() + " takes " + std::to_string(generator_count(variant.family)) +
                                        " independent phases");
    const Pattern& pat = pattern_of(variant);
    std::array<double, 4> a{};
    for (int s = 0; s < 4; ++s) a[s] = pat[s].sign * gens[pat[s].gen];
    return PhaseConfig(variant, a[0], a[1], a[2], a[3]);
}

PhaseConfig PhaseConfig::one_phase(int index, double delta) {
    return from_generators({Family::OnePhase, index}, {delta});
}

PhaseConfig PhaseConfig::two_phase(int index, double delta, double w) {
    return from_generators({Family::TwoPhase, index}, {delta, w});
}

PhaseConfig PhaseConfig::three_phase(int index, double f, double g, double h) {
    return from_generators({Family::ThreePhase, index}, {f, g, h});
}

PhaseConfig PhaseConfig::four_phase(double rho, double mu, double sigma, double nu) {
    return PhaseConfig({Family::FourPhase, 1}, rho, mu, sigma, nu);
}

std::vector<double> PhaseConfig::generators() const {
    const Pattern& pat = pattern_of(variant_);
    std::vector<std::optional<double>> g(generator_count(variant_.family));
    for (int s = 0; s < 4; ++s)
        if (pat[s].sign > 0 && !g[pat[s].gen]) g[pat[s].gen] = angles_[s];
    std::vector<double> out;
    for (auto& v : g) out.push_back(v.value_or(0.0));
    return out;
}

PhaseConfig PhaseConfig::as_four_phase() const {
    return four_phase(angles_[0], angles_[1], angles_[2], angles_[3]);
}

}  // namespace slab
