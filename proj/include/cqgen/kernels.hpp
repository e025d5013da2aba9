#pragma once

#include <functional>

#include "cqgen/matrix.hpp"

namespace cqgen::kernels {

// Runtime switch between the serial reference kernels and the OpenMP ones.
// Both paths compute every output element with the same per-element operation
// order, so results are bitwise identical; the serial path is the reference
// the tests compare against.
enum class ExecMode { Serial, Parallel };

ExecMode exec_mode();
void set_exec_mode(ExecMode mode);
int worker_count();

// Runs fn(i) for i in [0, n). Iterations must only write state owned by
// iteration i; scheduling carries no ordering guarantee.
void parallel_for(int n, const std::function<void(int)>& fn);
void parallel_for_serial(int n, const std::function<void(int)>& fn);

// C = alpha * op(A) * op(B), or += when accumulate is set.
// op is transpose when the corresponding flag is set. The (ta && tb) case is
// unused by the project and rejected.
void gemm(const Matrix& a, bool ta, const Matrix& b, bool tb, Matrix& c,
          double alpha = 1.0, bool accumulate = false);
void gemm_serial(const Matrix& a, bool ta, const Matrix& b, bool tb, Matrix& c,
                 double alpha = 1.0, bool accumulate = false);
void gemm_parallel(const Matrix& a, bool ta, const Matrix& b, bool tb, Matrix& c,
                   double alpha = 1.0, bool accumulate = false);

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows, b.cols);
    gemm(a, false, b, false, c);
    return c;
}

}  // namespace cqgen::kernels
