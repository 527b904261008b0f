#include "emcert/kernels.hpp"

namespace emcert::kernels {

namespace {

void caxpy_scalar(cd* y, const cd* x, cd a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void cgemm_sub_scalar(cd* c, std::size_t ldc, const cd* a, std::size_t lda,
                      const cd* b, std::size_t ldb,
                      std::size_t m, std::size_t n, std::size_t k) {
    for (std::size_t i = 0; i < m; ++i) {
        cd* ci = c + i * ldc;
        const cd* ai = a + i * lda;
        for (std::size_t p = 0; p < k; ++p) {
            const cd f = ai[p];
            if (f.real() == 0.0 && f.imag() == 0.0) continue;
            const cd* bp = b + p * ldb;
            for (std::size_t j = 0; j < n; ++j) ci[j] -= f * bp[j];
        }
    }
}

cd cdotc_scalar(const cd* x, const cd* y, std::size_t n) {
    cd s(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) s += std::conj(x[i]) * y[i];
    return s;
}

void crot_scalar(cd* x, cd* y, std::size_t n, double c, cd s) {
    const cd sc = std::conj(s);
    for (std::size_t i = 0; i < n; ++i) {
        const cd xi = x[i], yi = y[i];
        x[i] = c * xi + s * yi;
        y[i] = c * yi - sc * xi;
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", caxpy_scalar, cgemm_sub_scalar, cdotc_scalar, crot_scalar};
    return ops;
}

}  // namespace emcert::kernels
