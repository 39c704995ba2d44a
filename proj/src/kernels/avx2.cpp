#include <immintrin.h>

#include <cmath>

#include "slab/kernels.hpp"

namespace slab::kernels::avx2 {

namespace {

// exp(x) for x in [-700, 0]: Cody-Waite reduction, degree-13 Taylor, 2^n by exponent bits.
inline __m256d exp_neg(__m256d x) {
    const __m256d log2e = _mm256_set1_pd(1.4426950408889634);
    const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
    const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);

    const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, ln2_hi, x);
    r = _mm256_fnmadd_pd(n, ln2_lo, r);

    static constexpr double kInvFact[14] = {1.0,
                                            1.0,
                                            1.0 / 2,
                                            1.0 / 6,
                                            1.0 / 24,
                                            1.0 / 120,
                                            1.0 / 720,
                                            1.0 / 5040,
                                            1.0 / 40320,
                                            1.0 / 362880,
                                            1.0 / 3628800,
                                            1.0 / 39916800,
                                            1.0 / 479001600,
                                            1.0 / 6227020800};
    __m256d p = _mm256_set1_pd(kInvFact[13]);
    for (int i = 12; i >= 0; --i) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kInvFact[i]));

    const __m128i ni = _mm256_cvtpd_epi32(n);
    __m256i bits = _mm256_cvtepi32_epi64(ni);
    bits = _mm256_add_epi64(bits, _mm256_set1_epi64x(1023));
    bits = _mm256_slli_epi64(bits, 52);
    return _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
}

}  // namespace

bool compiled() { return true; }

void hermite_pair(int n, double g_scale, std::span<const double> t, std::span<double> f, std::span<double> g) {
    const std::size_t len = t.size();
    const std::size_t vec_end = len - len % 4;
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d half = _mm256_set1_pd(-0.5);
    const __m256d cutoff = _mm256_set1_pd(kTailCutoff);
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    const __m256d gs = _mm256_set1_pd(n == 0 ? 0.0 : g_scale);

    for (std::size_t i = 0; i < vec_end; i += 4) {
        const __m256d ti = _mm256_loadu_pd(&t[i]);
        const __m256d inside = _mm256_cmp_pd(_mm256_andnot_pd(sign_mask, ti), cutoff, _CMP_LT_OQ);
        // Clamp tail lanes so exp stays in range; they are masked to zero below.
        const __m256d tc = _mm256_blendv_pd(_mm256_setzero_pd(), ti, inside);

        __m256d hm1 = _mm256_setzero_pd();
        __m256d h = _mm256_set1_pd(1.0);
        const __m256d t2 = _mm256_mul_pd(two, tc);
        for (int j = 0; j < n; ++j) {
            const __m256d next = _mm256_sub_pd(_mm256_mul_pd(t2, h), _mm256_mul_pd(_mm256_set1_pd(2.0 * j), hm1));
            hm1 = h;
            h = next;
        }
        const __m256d e = exp_neg(_mm256_mul_pd(half, _mm256_mul_pd(tc, tc)));
        _mm256_storeu_pd(&f[i], _mm256_and_pd(inside, _mm256_mul_pd(h, e)));
        _mm256_storeu_pd(&g[i], _mm256_and_pd(inside, _mm256_mul_pd(gs, _mm256_mul_pd(hm1, e))));
    }
    if (vec_end < len)
        scalar::hermite_pair(n, g_scale, t.subspan(vec_end), f.subspan(vec_end), g.subspan(vec_end));
}

void current_density(std::span<const double> f, std::span<const double> g, double upper, double lower,
                     std::span<double> out) {
    const std::size_t len = f.size();
    const std::size_t vec_end = len - len % 4;
    const __m256d u = _mm256_set1_pd(upper);
    const __m256d l = _mm256_set1_pd(lower);
    for (std::size_t i = 0; i < vec_end; i += 4) {
        const __m256d fi = _mm256_loadu_pd(&f[i]);
        const __m256d gi = _mm256_loadu_pd(&g[i]);
        const __m256d r = _mm256_sub_pd(_mm256_mul_pd(_mm256_mul_pd(fi, fi), u), _mm256_mul_pd(_mm256_mul_pd(gi, gi), l));
        _mm256_storeu_pd(&out[i], r);
    }
    if (vec_end < len) scalar::current_density(f.subspan(vec_end), g.subspan(vec_end), upper, lower, out.subspan(vec_end));
}

}  // namespace slab::kernels::avx2
