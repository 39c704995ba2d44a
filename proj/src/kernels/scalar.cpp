#include <cmath>

#include "slab/kernels.hpp"

namespace slab::kernels::scalar {

void hermite_pair(int n, double g_scale, std::span<const double> t, std::span<double> f, std::span<double> g) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double ti = t[i];
        if (std::abs(ti) >= kTailCutoff) {
            f[i] = 0.0;
            g[i] = 0.0;
            continue;
        }
        double hm1 = 0.0;
        double h = 1.0;
        for (int j = 0; j < n; ++j) {
            const double next = 2.0 * ti * h - 2.0 * j * hm1;
            hm1 = h;
            h = next;
        }
        const double e = std::exp(-0.5 * ti * ti);
        f[i] = h * e;
        g[i] = n == 0 ? 0.0 : g_scale * hm1 * e;
    }
}

void current_density(std::span<const double> f, std::span<const double> g, double upper, double lower,
                     std::span<double> out) {
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * f[i] * upper - g[i] * g[i] * lower;
}

}  // namespace slab::kernels::scalar
