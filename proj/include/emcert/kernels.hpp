#pragma once

#include <complex>
#include <cstddef>

namespace emcert::kernels {

using cd = std::complex<double>;

/// Kernel table for the complex-double inner loops of the float path.
/// A scalar reference implementation always exists; SIMD variants (AVX2 on
/// x86-64, NEON on aarch64) are selected at runtime when the CPU supports
/// them. All variants compute the same values up to floating-point
/// reassociation and are equivalence-tested against the scalar reference.
struct Ops {
    const char* name;

    /// y[i] += a * x[i] for i in [0, n)
    void (*caxpy)(cd* y, const cd* x, cd a, std::size_t n);

    /// C -= A * B with row-major storage and leading dimensions:
    /// C is M x N (ldc), A is M x K (lda), B is K x N (ldb).
    void (*cgemm_sub)(cd* c, std::size_t ldc, const cd* a, std::size_t lda,
                      const cd* b, std::size_t ldb,
                      std::size_t m, std::size_t n, std::size_t k);

    /// sum_i conj(x[i]) * y[i]
    cd (*cdotc)(const cd* x, const cd* y, std::size_t n);

    /// Plane rotation with real c: (x, y) <- (c*x + s*y, -conj(s)*x + c*y).
    void (*crot)(cd* x, cd* y, std::size_t n, double c, cd s);
};

const Ops& scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();
#endif
#if defined(__aarch64__)
const Ops& neon_ops();
#endif

/// Currently selected kernel table (auto-detected on first use).
const Ops& active();

/// Selects "auto", "scalar", "avx2" or "neon". Returns false when the
/// requested backend is not available on this machine.
bool select_backend(const char* name);
const char* active_name();

/// Worker-thread count for the blocked float eliminations.
int thread_count();
void set_thread_count(int n);

}  // namespace emcert::kernels
