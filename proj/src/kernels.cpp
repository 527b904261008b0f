#include "emcert/kernels.hpp"

#include <atomic>
#include <cstring>
#include <thread>

namespace emcert::kernels {

namespace {

const Ops* detect_best() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return &avx2_ops();
#endif
#if defined(__aarch64__)
    return &neon_ops();
#endif
    return &scalar_ops();
}

std::atomic<const Ops*> g_active{nullptr};

int default_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<int>(hw > 8 ? 8 : hw);
}

std::atomic<int> g_threads{0};

}  // namespace

const Ops& active() {
    const Ops* p = g_active.load(std::memory_order_acquire);
    if (!p) {
        p = detect_best();
        g_active.store(p, std::memory_order_release);
    }
    return *p;
}

bool select_backend(const char* name) {
    if (std::strcmp(name, "auto") == 0) {
        g_active.store(detect_best(), std::memory_order_release);
        return true;
    }
    if (std::strcmp(name, "scalar") == 0) {
        g_active.store(&scalar_ops(), std::memory_order_release);
        return true;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (std::strcmp(name, "avx2") == 0 &&
        __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        g_active.store(&avx2_ops(), std::memory_order_release);
        return true;
    }
#endif
#if defined(__aarch64__)
    if (std::strcmp(name, "neon") == 0) {
        g_active.store(&neon_ops(), std::memory_order_release);
        return true;
    }
#endif
    return false;
}

const char* active_name() { return active().name; }

int thread_count() {
    int t = g_threads.load(std::memory_order_relaxed);
    return t > 0 ? t : default_threads();
}

void set_thread_count(int n) { g_threads.store(n, std::memory_order_relaxed); }

}  // namespace emcert::kernels
