#pragma once

#include <span>
#include <vector>

namespace slab {

inline constexpr int kMaxLandauIndex = 64;

/// Normalizable Landau-level solution of the transverse oscillator equation.
class TransverseMode {
public:
    /// Throws DomainError for n outside [0, 64], B <= 0 or non-finite px.
    TransverseMode(int n, double field, double px);

    int n() const { return n_; }
    double field() const { return field_; }
    double px() const { return px_; }
    double lambda_sq() const { return 2.0 * n_ * field_; }

    /// t = (px + B y)/sqrt(B).
    double t_of(double y) const;
    /// Inverse of t_of.
    double y_of(double t) const;

private:
    int n_;
    double field_;
    double px_;
};

/// Physicists' Hermite polynomial by upward recurrence.
double hermite(int n, double t);

/// H_n(t) exp(-t^2/2).
double eval_f(const TransverseMode& mode, double y);
/// (d/dy + px + B y) f = 2 n sqrt(B) H_{n-1}(t) exp(-t^2/2).
double eval_g(const TransverseMode& mode, double y);
/// f / sqrt(2^n n! sqrt(pi)), unit norm in t.
double eval_f_normalized(const TransverseMode& mode, double y);

/// sqrt(M^2 + k^2 + 2 n B).
double energy_from_landau(double mass, double k, int n, double field);

struct Profiles {
    std::vector<double> f;
    std::vector<double> g;
};

/// f and g on a y-grid through the dispatched kernels.
Profiles eval_profiles(const TransverseMode& mode, std::span<const double> ys);

}  // namespace slab
