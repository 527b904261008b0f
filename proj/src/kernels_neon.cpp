// NEON variants for aarch64. One complex double per 128-bit vector, so the
// win over scalar comes mainly from the fused complex multiply sequence
// (FCMLA is not assumed; plain FMLA on the [re, im] pair).

#if defined(__aarch64__)

#include <arm_neon.h>

#include "emcert/kernels.hpp"

namespace emcert::kernels {

namespace {

// acc += a * x for one packed complex double [re, im].
inline float64x2_t cmadd1(float64x2_t arv, float64x2_t aiv, float64x2_t x,
                          float64x2_t acc) {
    float64x2_t xs = vextq_f64(x, x, 1);               // [im, re]
    float64x2_t t = vmulq_f64(aiv, xs);                // [ai*im, ai*re]
    const float64x2_t sign = {-1.0, 1.0};
    return vfmaq_f64(vfmaq_f64(acc, sign, t), arv, x); // acc + ar*x + (-ai*im, ai*re)
}

void caxpy_neon(cd* y, const cd* x, cd a, std::size_t n) {
    double* yd = reinterpret_cast<double*>(y);
    const double* xd = reinterpret_cast<const double*>(x);
    const float64x2_t arv = vdupq_n_f64(a.real());
    const float64x2_t aiv = vdupq_n_f64(a.imag());
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t xv = vld1q_f64(xd + 2 * i);
        float64x2_t yv = vld1q_f64(yd + 2 * i);
        vst1q_f64(yd + 2 * i, cmadd1(arv, aiv, xv, yv));
    }
}

void cgemm_sub_neon(cd* c, std::size_t ldc, const cd* a, std::size_t lda,
                    const cd* b, std::size_t ldb,
                    std::size_t m, std::size_t n, std::size_t k) {
    for (std::size_t i = 0; i < m; ++i) {
        cd* ci = c + i * ldc;
        const cd* ai = a + i * lda;
        for (std::size_t p = 0; p < k; ++p) {
            const cd f = ai[p];
            if (f.real() == 0.0 && f.imag() == 0.0) continue;
            caxpy_neon(ci, b + p * ldb, -f, n);
        }
    }
}

cd cdotc_neon(const cd* x, const cd* y, std::size_t n) {
    cd s(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) s += std::conj(x[i]) * y[i];
    return s;
}

void crot_neon(cd* x, cd* y, std::size_t n, double c, cd s) {
    const cd sc = std::conj(s);
    for (std::size_t i = 0; i < n; ++i) {
        const cd xi = x[i], yi = y[i];
        x[i] = c * xi + s * yi;
        y[i] = c * yi - sc * xi;
    }
}

}  // namespace

const Ops& neon_ops() {
    static const Ops ops{"neon", caxpy_neon, cgemm_sub_neon, cdotc_neon, crot_neon};
    return ops;
}

}  // namespace emcert::kernels

#endif  // aarch64
