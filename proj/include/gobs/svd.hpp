#pragma once

#include <complex>
#include <vector>

namespace gobs {

using cplx = std::complex<double>;

// Singular values of a dense rows x cols complex matrix (row-major),
// descending. One-sided Jacobi on the min(rows, cols) Gram columns; small
// singular values come out with absolute accuracy O(eps * ||A||), which is
// what the near-zero certificates need. Deterministic: fixed sweep order,
// no randomization.
std::vector<double> singular_values(int rows, int cols, const cplx* a);

double smallest_singular_value(int rows, int cols, const cplx* a);

}  // namespace gobs
