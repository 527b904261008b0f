// AVX2+FMA variants of the complex-double kernels. Compiled with
// -mavx2 -mfma; only dispatched at runtime when the CPU reports support.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "emcert/kernels.hpp"

namespace emcert::kernels {

namespace {

// Complex multiply-accumulate on packed [re, im, re, im] lanes:
// acc += a * x where a is broadcast as (ar, ai).
// re' = ar*xr - ai*xi, im' = ar*xi + ai*xr, which is exactly
// fmaddsub(ar, x, ai * swap(x)).
inline __m256d cmadd(__m256d arv, __m256d aiv, __m256d x, __m256d acc) {
    __m256d xs = _mm256_permute_pd(x, 0x5);
    __m256d t = _mm256_mul_pd(aiv, xs);
    return _mm256_add_pd(acc, _mm256_fmaddsub_pd(arv, x, t));
}

void caxpy_avx2(cd* y, const cd* x, cd a, std::size_t n) {
    double* yd = reinterpret_cast<double*>(y);
    const double* xd = reinterpret_cast<const double*>(x);
    const __m256d arv = _mm256_set1_pd(a.real());
    const __m256d aiv = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i, cmadd(arv, aiv, xv, yv));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

// 4x4-complex register tile: acc[r][v] accumulates A[i+r, :] * B[:, 4 cols].
void cgemm_sub_avx2(cd* c, std::size_t ldc, const cd* a, std::size_t lda,
                    const cd* b, std::size_t ldb,
                    std::size_t m, std::size_t n, std::size_t k) {
    const double* bd = reinterpret_cast<const double*>(b);
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        std::size_t j = 0;
        for (; j + 4 <= n; j += 4) {
            __m256d acc[4][2];
            for (int r = 0; r < 4; ++r)
                for (int v = 0; v < 2; ++v) acc[r][v] = _mm256_setzero_pd();
            for (std::size_t p = 0; p < k; ++p) {
                const double* bp = bd + 2 * (p * ldb + j);
                __m256d b0 = _mm256_loadu_pd(bp);
                __m256d b1 = _mm256_loadu_pd(bp + 4);
                for (int r = 0; r < 4; ++r) {
                    const cd av = a[(i + r) * lda + p];
                    __m256d arv = _mm256_set1_pd(av.real());
                    __m256d aiv = _mm256_set1_pd(av.imag());
                    acc[r][0] = cmadd(arv, aiv, b0, acc[r][0]);
                    acc[r][1] = cmadd(arv, aiv, b1, acc[r][1]);
                }
            }
            for (int r = 0; r < 4; ++r) {
                double* cp = reinterpret_cast<double*>(c + (i + r) * ldc + j);
                _mm256_storeu_pd(cp, _mm256_sub_pd(_mm256_loadu_pd(cp), acc[r][0]));
                _mm256_storeu_pd(cp + 4, _mm256_sub_pd(_mm256_loadu_pd(cp + 4), acc[r][1]));
            }
        }
        for (; j < n; ++j) {
            for (int r = 0; r < 4; ++r) {
                cd s(0.0, 0.0);
                for (std::size_t p = 0; p < k; ++p) s += a[(i + r) * lda + p] * b[p * ldb + j];
                c[(i + r) * ldc + j] -= s;
            }
        }
    }
    for (; i < m; ++i) {
        cd* ci = c + i * ldc;
        const cd* ai = a + i * lda;
        for (std::size_t p = 0; p < k; ++p) {
            const cd f = ai[p];
            if (f.real() == 0.0 && f.imag() == 0.0) continue;
            caxpy_avx2(ci, b + p * ldb, -f, n);
        }
    }
}

cd cdotc_avx2(const cd* x, const cd* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        __m256d xs = _mm256_permute_pd(xv, 0x5);
        acc_re = _mm256_fmadd_pd(xv, yv, acc_re);  // [xr*yr, xi*yi, ...]
        acc_im = _mm256_fmadd_pd(xs, yv, acc_im);  // [xi*yr, xr*yi, ...]
    }
    alignas(32) double re4[4], im4[4];
    _mm256_store_pd(re4, acc_re);
    _mm256_store_pd(im4, acc_im);
    cd s(re4[0] + re4[1] + re4[2] + re4[3],
         (im4[1] + im4[3]) - (im4[0] + im4[2]));
    for (; i < n; ++i) s += std::conj(x[i]) * y[i];
    return s;
}

void crot_avx2(cd* x, cd* y, std::size_t n, double c, cd s) {
    double* xd = reinterpret_cast<double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d srv = _mm256_set1_pd(s.real());
    const __m256d siv = _mm256_set1_pd(s.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        __m256d ys = _mm256_permute_pd(yv, 0x5);
        __m256d xs = _mm256_permute_pd(xv, 0x5);
        // s*y and conj(s)*x
        __m256d sy = _mm256_fmaddsub_pd(srv, yv, _mm256_mul_pd(siv, ys));
        __m256d csx = _mm256_fmsubadd_pd(srv, xv, _mm256_mul_pd(siv, xs));
        _mm256_storeu_pd(xd + 2 * i, _mm256_fmadd_pd(cv, xv, sy));
        _mm256_storeu_pd(yd + 2 * i, _mm256_fmsub_pd(cv, yv, csx));
    }
    const cd sc = std::conj(s);
    for (; i < n; ++i) {
        const cd xi = x[i], yi = y[i];
        x[i] = c * xi + s * yi;
        y[i] = c * yi - sc * xi;
    }
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops{"avx2", caxpy_avx2, cgemm_sub_avx2, cdotc_avx2, crot_avx2};
    return ops;
}

}  // namespace emcert::kernels

#endif  // x86-64
