#include "cqgen/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cqgen::kernels {

namespace {
std::atomic<ExecMode> g_mode{ExecMode::Parallel};

struct GemmDims {
    int m, n, k;
};

GemmDims check_dims(const Matrix& a, bool ta, const Matrix& b, bool tb, const Matrix& c) {
    if (ta && tb) throw ValidationError("gemm: transposed-transposed form is not supported");
    const int m = ta ? a.cols : a.rows;
    const int k = ta ? a.rows : a.cols;
    const int kb = tb ? b.cols : b.rows;
    const int n = tb ? b.rows : b.cols;
    if (k != kb || c.rows != m || c.cols != n)
        throw ValidationError("gemm: shape mismatch");
    return {m, n, k};
}

// One output row of C; the single source of truth for element order in all
// execution modes.
inline void gemm_row(const Matrix& a, bool ta, const Matrix& b, bool tb, Matrix& c,
                     double alpha, bool accumulate, int i, const GemmDims& d) {
    double* crow = c.row(i);
    if (!accumulate) {
        for (int j = 0; j < d.n; ++j) crow[j] = 0.0;
    }
    if (!ta && !tb) {
        const double* arow = a.row(i);
        for (int kk = 0; kk < d.k; ++kk) {
            const double av = alpha * arow[kk];
            const double* brow = b.row(kk);
            for (int j = 0; j < d.n; ++j) crow[j] += av * brow[j];
        }
    } else if (!ta && tb) {
        const double* arow = a.row(i);
        for (int j = 0; j < d.n; ++j) {
            const double* brow = b.row(j);
            double acc = 0.0;
            for (int kk = 0; kk < d.k; ++kk) acc += arow[kk] * brow[kk];
            crow[j] += alpha * acc;
        }
    } else {  // ta && !tb : C(i,:) = sum_k A(k,i) * B(k,:)
        for (int kk = 0; kk < d.k; ++kk) {
            const double av = alpha * a(kk, i);
            const double* brow = b.row(kk);
            for (int j = 0; j < d.n; ++j) crow[j] += av * brow[j];
        }
    }
}

}  // namespace

ExecMode exec_mode() { return g_mode.load(std::memory_order_relaxed); }
void set_exec_mode(ExecMode mode) { g_mode.store(mode, std::memory_order_relaxed); }

int worker_count() {
#ifdef _OPENMP
    return exec_mode() == ExecMode::Parallel ? omp_get_max_threads() : 1;
#else
    return 1;
#endif
}

void parallel_for_serial(int n, const std::function<void(int)>& fn) {
    for (int i = 0; i < n; ++i) fn(i);
}

void parallel_for(int n, const std::function<void(int)>& fn) {
#ifdef _OPENMP
    if (exec_mode() == ExecMode::Parallel && !omp_in_parallel() && n > 1) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
#endif
    parallel_for_serial(n, fn);
}

void gemm_serial(const Matrix& a, bool ta, const Matrix& b, bool tb, Matrix& c,
                 double alpha, bool accumulate) {
    const GemmDims d = check_dims(a, ta, b, tb, c);
    for (int i = 0; i < d.m; ++i) gemm_row(a, ta, b, tb, c, alpha, accumulate, i, d);
}

void gemm_parallel(const Matrix& a, bool ta, const Matrix& b, bool tb, Matrix& c,
                   double alpha, bool accumulate) {
    const GemmDims d = check_dims(a, ta, b, tb, c);
#ifdef _OPENMP
    if (!omp_in_parallel() && static_cast<long long>(d.m) * d.n * d.k >= 16384) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < d.m; ++i) gemm_row(a, ta, b, tb, c, alpha, accumulate, i, d);
        return;
    }
#endif
    for (int i = 0; i < d.m; ++i) gemm_row(a, ta, b, tb, c, alpha, accumulate, i, d);
}

void gemm(const Matrix& a, bool ta, const Matrix& b, bool tb, Matrix& c,
          double alpha, bool accumulate) {
    if (exec_mode() == ExecMode::Parallel)
        gemm_parallel(a, ta, b, tb, c, alpha, accumulate);
    else
        gemm_serial(a, ta, b, tb, c, alpha, accumulate);
}

}  // namespace cqgen::kernels
