#include "emcert/float_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "emcert/kernels.hpp"

namespace emcert {

using cd = std::complex<double>;

namespace {

double abs2(cd z) { return z.real() * z.real() + z.imag() * z.imag(); }

// Runs fn(t) on `nthreads` workers, fn partitioning internally by t.
template <typename Fn>
void run_workers(int nthreads, Fn&& fn) {
    if (nthreads <= 1) {
        fn(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nthreads - 1);
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(fn, t);
    fn(0);
    for (auto& th : pool) th.join();
}

constexpr int kJacobiRankLimit = 384;

}  // namespace

FloatMatrix to_float(const DenseMatrix& a) {
    FloatMatrix f(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            f.at(i, j) = a.at(i, j).to_complex();
    return f;
}

double sigma_max_bound(const FloatMatrix& a) {
    std::vector<double> colsum(a.cols, 0.0), rowsum(a.rows, 0.0);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            double m = std::abs(a.at(i, j));
            rowsum[i] += m;
            colsum[j] += m;
        }
    double n1 = 0.0, ninf = 0.0;
    for (double v : colsum) n1 = std::max(n1, v);
    for (double v : rowsum) ninf = std::max(ninf, v);
    return std::sqrt(n1 * ninf);
}

double auto_tolerance(const FloatMatrix& a) {
    const double eps = std::numeric_limits<double>::epsilon();
    return std::max(a.rows, a.cols) * eps * sigma_max_bound(a);
}

std::vector<double> singular_values(const FloatMatrix& a) {
    // One-sided Jacobi on columns. Work on the transposed copy so each
    // "column" is contiguous.
    const int m = a.rows, n = a.cols;
    std::vector<std::vector<cd>> col(n, std::vector<cd>(m));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) col[j][i] = a.at(i, j);

    const auto& K = kernels::active();
    const double eps = std::numeric_limits<double>::epsilon();
    for (int sweep = 0; sweep < 40; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                cd gamma = K.cdotc(col[p].data(), col[q].data(), m);
                double alpha = K.cdotc(col[p].data(), col[p].data(), m).real();
                double beta = K.cdotc(col[q].data(), col[q].data(), m).real();
                double g = std::abs(gamma);
                if (g <= 10.0 * eps * std::sqrt(alpha * beta) || g == 0.0) continue;
                rotated = true;
                double tau = (beta - alpha) / (2.0 * g);
                double t = (tau >= 0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                cd phase = std::conj(gamma) / g;
                cd s = (c * t) * phase;
                K.crot(col[p].data(), col[q].data(), m, c, s);
            }
        }
        if (!rotated) break;
    }
    std::vector<double> sv(n);
    for (int j = 0; j < n; ++j)
        sv[j] = std::sqrt(K.cdotc(col[j].data(), col[j].data(), m).real());
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

std::vector<double> hermitian_eigenvalues(const FloatMatrix& a) {
    if (a.rows != a.cols) throw std::invalid_argument("hermitian_eigenvalues: not square");
    const int n = a.rows;
    FloatMatrix h = a;
    const double eps = std::numeric_limits<double>::epsilon();
    double scale = 0.0;
    for (const auto& z : h.e) scale = std::max(scale, std::abs(z));
    if (scale == 0.0) return std::vector<double>(n, 0.0);

    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(h.at(p, q)));
        if (off <= 10.0 * eps * scale) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                cd gamma = h.at(p, q);
                double g = std::abs(gamma);
                if (g <= 10.0 * eps * scale) continue;
                double alpha = h.at(p, p).real();
                double beta = h.at(q, q).real();
                double tau = (beta - alpha) / (2.0 * g);
                double t = (tau >= 0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                cd phase = std::conj(gamma) / g;
                cd s = (c * t) * phase;
                // H <- J^H H J with J = [[c, s], [-conj(s), c]] on (p, q).
                const cd sc = std::conj(s);
                for (int i = 0; i < n; ++i) {  // column update
                    cd hip = h.at(i, p), hiq = h.at(i, q);
                    h.at(i, p) = c * hip - sc * hiq;
                    h.at(i, q) = s * hip + c * hiq;
                }
                for (int j = 0; j < n; ++j) {  // row update
                    cd hpj = h.at(p, j), hqj = h.at(q, j);
                    h.at(p, j) = c * hpj - s * hqj;
                    h.at(q, j) = sc * hpj + c * hqj;
                }
                h.at(p, q) = cd(0.0, 0.0);
                h.at(q, p) = cd(0.0, 0.0);
            }
        }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = h.at(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

namespace {

// Blocked in-place elimination with partial (row) pivoting and a column-skip
// threshold; returns the pivot count. Panel of kPanel columns, trailing
// update via the dispatched complex GEMM kernel, split over worker threads
// by column strips.
int rank_elimination(FloatMatrix& a, double tol) {
    constexpr int kPanel = 48;
    const int m = a.rows, n = a.cols;
    const double tol2 = tol * tol;
    const auto& K = kernels::active();
    int r = 0;

    std::vector<cd> packed;  // multipliers gathered for the GEMM update
    for (int c0 = 0; c0 < n && r < m; c0 += kPanel) {
        const int c1 = std::min(c0 + kPanel, n);
        const int r0 = r;
        std::vector<int> piv_cols;
        for (int c = c0; c < c1 && r < m; ++c) {
            int best = -1;
            double bestv = tol2;
            for (int i = r; i < m; ++i) {
                double v = abs2(a.at(i, c));
                if (v > bestv) { bestv = v; best = i; }
            }
            if (best < 0) continue;  // column numerically zero below r
            if (best != r)
                for (int j = 0; j < n; ++j) std::swap(a.at(best, j), a.at(r, j));
            const cd pivot = a.at(r, c);
            const int panel_w = c1 - (c + 1);
            for (int i = r + 1; i < m; ++i) {
                cd f = a.at(i, c) / pivot;
                a.at(i, c) = f;
                if (panel_w > 0 && (f.real() != 0.0 || f.imag() != 0.0))
                    K.caxpy(&a.at(i, c + 1), &a.at(r, c + 1), -f, panel_w);
            }
            piv_cols.push_back(c);
            ++r;
        }
        const int p = static_cast<int>(piv_cols.size());
        const int ntrail = n - c1;
        if (p == 0 || ntrail == 0) continue;

        // Finish the pivot rows on the trailing columns (unit lower solve).
        for (int k = 1; k < p; ++k)
            for (int j = 0; j < k; ++j) {
                cd f = a.at(r0 + k, piv_cols[j]);
                if (f.real() != 0.0 || f.imag() != 0.0)
                    K.caxpy(&a.at(r0 + k, c1), &a.at(r0 + j, c1), -f, ntrail);
            }

        const int mtrail = m - r;
        if (mtrail == 0) continue;
        packed.assign(static_cast<std::size_t>(mtrail) * p, cd(0, 0));
        for (int i = 0; i < mtrail; ++i)
            for (int k = 0; k < p; ++k) packed[static_cast<std::size_t>(i) * p + k] = a.at(r + i, piv_cols[k]);

        const int nthreads = std::min(kernels::thread_count(), std::max(1, ntrail / 256));
        run_workers(nthreads, [&](int t) {
            const int strip = (ntrail + nthreads - 1) / nthreads;
            const int j0 = t * strip;
            const int j1 = std::min(j0 + strip, ntrail);
            if (j0 >= j1) return;
            K.cgemm_sub(&a.at(r, c1 + j0), n, packed.data(), p, &a.at(r0, c1 + j0), n,
                        mtrail, j1 - j0, p);
        });
    }
    return r;
}

}  // namespace

int rank_float(const FloatMatrix& a, double tol) {
    if (a.rows == 0 || a.cols == 0) return 0;
    const double eps = std::numeric_limits<double>::epsilon();
    if (std::min(a.rows, a.cols) <= kJacobiRankLimit) {
        auto sv = singular_values(a);
        if (tol < 0) tol = std::max(a.rows, a.cols) * eps * (sv.empty() ? 0.0 : sv.front());
        int r = 0;
        for (double s : sv)
            if (s > tol) ++r;
        return r;
    }
    // Large systems: sigma_max is replaced by its sqrt(norm1*normInf) upper
    // bound, which only makes the threshold more conservative.
    if (tol < 0) tol = auto_tolerance(a);
    FloatMatrix work = a;
    return rank_elimination(work, tol);
}

std::optional<std::vector<cd>> nullspace_vector_float(const FloatMatrix& a, double tol) {
    if (tol < 0) tol = auto_tolerance(a);
    FloatMatrix m = a;
    const int rows = m.rows, cols = m.cols;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int best = -1;
        double bestv = tol * tol;
        for (int i = r; i < rows; ++i) {
            double v = abs2(m.at(i, c));
            if (v > bestv) { bestv = v; best = i; }
        }
        if (best < 0) continue;
        if (best != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(best, j), m.at(r, j));
        cd inv = 1.0 / m.at(r, c);
        for (int j = c; j < cols; ++j) m.at(r, j) *= inv;
        m.at(r, c) = cd(1.0, 0.0);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            cd f = m.at(i, c);
            if (f.real() == 0.0 && f.imag() == 0.0) continue;
            m.at(i, c) = cd(0.0, 0.0);
            for (int j = c + 1; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<cd> x(cols, cd(0.0, 0.0));
        x[f] = cd(1.0, 0.0);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            x[pivots[k]] = -m.at(static_cast<int>(k), f);
        return x;
    }
    return std::nullopt;
}

}  // namespace emcert
