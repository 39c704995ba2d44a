#include <atomic>
#include <cassert>

#include "slab/kernels.hpp"

namespace slab::kernels {

#ifndef SLAB_HAVE_AVX2
namespace avx2 {
bool compiled() { return false; }
void hermite_pair(int n, double g_scale, std::span<const double> t, std::span<double> f, std::span<double> g) {
    scalar::hermite_pair(n, g_scale, t, f, g);
}
void current_density(std::span<const double> f, std::span<const double> g, double upper, double lower,
                     std::span<double> out) {
    scalar::current_density(f, g, upper, lower, out);
}
}  // namespace avx2
#endif

namespace {

bool cpu_has_avx2() {
#if defined(SLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

std::atomic<Isa>& active() {
    static std::atomic<Isa> isa{detected_isa()};
    return isa;
}

}  // namespace

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
    static const Isa isa = cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
    return isa;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

bool set_isa(Isa isa) {
    if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) return false;
    active().store(isa, std::memory_order_relaxed);
    return true;
}

void hermite_pair(int n, double g_scale, std::span<const double> t, std::span<double> f, std::span<double> g) {
    assert(f.size() == t.size() && g.size() == t.size());
    if (active_isa() == Isa::Avx2)
        avx2::hermite_pair(n, g_scale, t, f, g);
    else
        scalar::hermite_pair(n, g_scale, t, f, g);
}

void current_density(std::span<const double> f, std::span<const double> g, double upper, double lower,
                     std::span<double> out) {
    assert(g.size() == f.size() && out.size() == f.size());
    if (active_isa() == Isa::Avx2)
        avx2::current_density(f, g, upper, lower, out);
    else
        scalar::current_density(f, g, upper, lower, out);
}

}  // namespace slab::kernels
