#pragma once

#include <array>

#include "spinvar/operators.hpp"

namespace spinvar {

// Hand-rolled cyclic Jacobi diagonalization for 3x3 real symmetric and
// complex Hermitian matrices.  Pivots sweep the fixed order (0,1), (0,2),
// (1,2) and iteration stops when the off-diagonal Frobenius norm drops below
// tol().jacobi_sweep * ||A||_F, so the result is deterministic across
// platforms.  Eigenvalues are returned unsorted, in the order the sweep
// leaves them; columns of V are the matching eigenvectors with A V = V D.

struct JacobiReal {
    std::array<double, 3> eigenvalues;
    Mat3 vectors;
};

struct JacobiHermitian {
    std::array<double, 3> eigenvalues;
    CMat3 vectors;
};

JacobiReal jacobi_eigen_sym(const Mat3& a);
JacobiHermitian jacobi_eigen_herm(const CMat3& a);

} // namespace spinvar
