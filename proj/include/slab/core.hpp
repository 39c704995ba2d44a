#pragma once

#include <array>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace slab {

using cplx = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;

/// +sqrt(eps^2 - M^2). Throws DomainError for eps < M or M <= 0.
double longitudinal_p(double energy, double mass);

struct Polarization {
    double alpha;
    double beta;
};

/// alpha = (eps + p)/M, beta = 1/alpha.
Polarization polarization_ratios(double energy, double mass);

/// X = (alpha - x)/(1 - alpha x). Requires alpha > 1.
cplx mobius_X(double alpha, cplx x);

/// Angle reduced to [0, 2pi).
double reduce_angle(double angle);

inline cplx unit(double angle) { return std::polar(1.0, angle); }

struct ParamSpec {
    double mass = 1.0;
    double energy = 2.0;
    double px = 0.0;
    double field = 0.0;
    double half_width = 1.0;
    double k = 0.0;
};

/// Physical state of one mode family. Immutable; p, alpha, beta are cached.
class PhysicalParams {
public:
    explicit PhysicalParams(const ParamSpec& spec);

    double mass() const { return mass_; }
    double energy() const { return energy_; }
    double px() const { return px_; }
    double field() const { return field_; }
    double half_width() const { return half_width_; }
    double k() const { return k_; }

    double p() const { return p_; }
    double alpha() const { return alpha_; }
    double beta() const { return 1.0 / alpha_; }

    PhysicalParams with_k(double k) const;
    PhysicalParams with_half_width(double a) const;
    ParamSpec spec() const;

private:
    double mass_, energy_, px_, field_, half_width_, k_;
    double p_, alpha_;
};

enum class Family { OnePhase, TwoPhase, ThreePhase, FourPhase };

struct VariantId {
    Family family = Family::FourPhase;
    int index = 1;

    /// e.g. "OnePhase(3)", "FourPhase".
    std::string name() const;
    static VariantId parse(std::string_view text);
    static int family_size(Family f);

    friend bool operator==(const VariantId&, const VariantId&) = default;
};

/// All 19 variants in table order.
std::vector<VariantId> all_variants();

/// The four boundary phases (rho, mu, sigma, nu) and the pattern they follow.
class PhaseConfig {
public:
    /// Validates the pattern for special families.
    PhaseConfig(VariantId variant, double rho, double mu, double sigma, double nu);

    static PhaseConfig one_phase(int index, double delta);
    static PhaseConfig two_phase(int index, double delta, double w);
    static PhaseConfig three_phase(int index, double f, double g, double h);
    static PhaseConfig four_phase(double rho, double mu, double sigma, double nu);
    /// Builds the pattern for `variant` from its independent phases.
    static PhaseConfig from_generators(VariantId variant, const std::vector<double>& gens);

    const VariantId& variant() const { return variant_; }
    double rho() const { return angles_[0]; }
    double mu() const { return angles_[1]; }
    double sigma() const { return angles_[2]; }
    double nu() const { return angles_[3]; }
    const std::array<double, 4>& angles() const { return angles_; }

    cplx x() const { return unit(angles_[0]); }
    cplx y() const { return unit(angles_[1]); }
    cplx v() const { return unit(angles_[2]); }
    cplx w() const { return unit(angles_[3]); }

    /// Independent phases of the variant (Delta; Delta, W; F, G, H; or all four).
    std::vector<double> generators() const;

    /// Same angles, relabelled as the general four-phase case.
    PhaseConfig as_four_phase() const;

private:
    VariantId variant_;
    std::array<double, 4> angles_;
};

/// Number of independent phases for a family.
int generator_count(Family f);

}  // namespace slab
