#include "slab/transverse.hpp"

#include <cmath>
#include <numbers>

#include "slab/errors.hpp"
#include "slab/kernels.hpp"

namespace slab {

TransverseMode::TransverseMode(int n, double field, double px) : n_(n), field_(field), px_(px) {
    if (n < 0 || n > kMaxLandauIndex) throw DomainError("landau_level", "must be in 0..64");
    if (!(field > 0.0) || !std::isfinite(field)) throw DomainError("field", "transverse profile needs B > 0");
    if (!std::isfinite(px)) throw DomainError("px", "must be finite");
}

double TransverseMode::t_of(double y) const { return (px_ + field_ * y) / std::sqrt(field_); }

double TransverseMode::y_of(double t) const { return (t * std::sqrt(field_) - px_) / field_; }

double hermite(int n, double t) {
    if (n < 0) throw DomainError("n", "must be >= 0");
    double hm1 = 0.0;
    double h = 1.0;
    for (int j = 0; j < n; ++j) {
        const double next = 2.0 * t * h - 2.0 * j * hm1;
        hm1 = h;
        h = next;
    }
    return h;
}

double eval_f(const TransverseMode& mode, double y) {
    const double t = mode.t_of(y);
    double f = 0.0, g = 0.0;
    kernels::scalar::hermite_pair(mode.n(), 0.0, {&t, 1}, {&f, 1}, {&g, 1});
    return f;
}

double eval_g(const TransverseMode& mode, double y) {
    const double t = mode.t_of(y);
    double f = 0.0, g = 0.0;
    kernels::scalar::hermite_pair(mode.n(), 2.0 * mode.n() * std::sqrt(mode.field()), {&t, 1}, {&f, 1}, {&g, 1});
    return g;
}

double eval_f_normalized(const TransverseMode& mode, double y) {
    const int n = mode.n();
    const double log_norm = 0.5 * (n * std::log(2.0) + std::lgamma(n + 1.0) + 0.5 * std::log(std::numbers::pi));
    return eval_f(mode, y) * std::exp(-log_norm);
}

double energy_from_landau(double mass, double k, int n, double field) {
    if (!(mass > 0.0)) throw DomainError("mass", "must be positive");
    if (n < 0) throw DomainError("landau_level", "must be >= 0");
    if (!(field >= 0.0)) throw DomainError("field", "must be >= 0");
    return std::sqrt(mass * mass + k * k + 2.0 * n * field);
}

Profiles eval_profiles(const TransverseMode& mode, std::span<const double> ys) {
    std::vector<double> t(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) t[i] = mode.t_of(ys[i]);
    Profiles out{std::vector<double>(ys.size()), std::vector<double>(ys.size())};
    kernels::hermite_pair(mode.n(), 2.0 * mode.n() * std::sqrt(mode.field()), t, out.f, out.g);
    return out;
}

}  // namespace slab
