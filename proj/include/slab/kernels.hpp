#pragma once

#include <span>

namespace slab::kernels {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);
/// Best instruction set compiled in and supported by this CPU.
Isa detected_isa();
Isa active_isa();
/// Forces a kernel set. Returns false (and changes nothing) if unavailable.
bool set_isa(Isa isa);

/// Beyond this |t| the Gaussian factor is treated as zero.
inline constexpr double kTailCutoff = 37.0;

/// f[i] = H_n(t[i]) exp(-t[i]^2/2), g[i] = g_scale H_{n-1}(t[i]) exp(-t[i]^2/2) (g = 0 for n = 0).
void hermite_pair(int n, double g_scale, std::span<const double> t, std::span<double> f, std::span<double> g);

/// out[i] = f[i]^2 upper - g[i]^2 lower.
void current_density(std::span<const double> f, std::span<const double> g, double upper, double lower,
                     std::span<double> out);

namespace scalar {
void hermite_pair(int n, double g_scale, std::span<const double> t, std::span<double> f, std::span<double> g);
void current_density(std::span<const double> f, std::span<const double> g, double upper, double lower,
                     std::span<double> out);
}  // namespace scalar

namespace avx2 {
bool compiled();
void hermite_pair(int n, double g_scale, std::span<const double> t, std::span<double> f, std::span<double> g);
void current_density(std::span<const double> f, std::span<const double> g, double upper, double lower,
                     std::span<double> out);
}  // namespace avx2

}  // namespace slab::kernels
