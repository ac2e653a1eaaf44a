#pragma once

#include <array>

#include "spinvar/state.hpp"

namespace spinvar {

// The two covariance matrices of one state:
//   m_real_{k,l} = (<j_k j_l> + <j_l j_k>)/2 - <j_k><j_l>   (real symmetric)
//   m_herm_{k,l} = <j_k j_l> - <j_k><j_l>                   (complex Hermitian)
// They differ by the antisymmetric part (i/2) sum_n eps_{k,l,n} <j_n> and
// coincide exactly for states with <j> = 0.
struct CovariancePair {
    Mat3 m_real;
    CMat3 m_herm;
    Vec3 mean;
    HalfInteger j;
};

enum class MatrixKind { RealSymmetric, ComplexHermitian };

// Principal variances in descending order with the diagonalizing frame.
// frame * matrix * frame^dag is diagonal; axes[k] is the eigenvector whose
// projection u_k.j carries variance variances[k], i.e. the k-th row of the
// frame conjugated.  The frame determinant is fixed to +1 (proper rotation
// R_d for the real kind, special-unitary U_d for the Hermitian kind).
//
// Determinism conventions: eigenvalues sorted descending with ties kept in
// Jacobi sweep order; each axis is phase-normalized so its entry of largest
// magnitude (first such index on ties) is real and positive; the third axis
// then absorbs whatever phase or sign makes det(frame) = 1.  Eigenvalues in
// [-psd_floor, 0) are clamped to zero.
struct PrincipalDecomposition {
    std::array<double, 3> variances;
    std::array<CVec3, 3> axes;
    CMat3 frame;
    MatrixKind kind;
};

// Right-handed orthonormal triad adapted to the mean spin direction.
struct LongitudinalFrame {
    Vec3 eperp1, eperp2, epar;
};

struct ParityCheckResult {
    bool symmetric;                    // ||U rho U^dag - rho||_inf small
    std::array<double, 2> residuals;   // symmetrized <j_perp j_par> correlations
    bool axis_principal;               // axis is an eigenvector of M
};

CovariancePair covariance_pair(const QuantumState& state, const OperatorTriple& ops);

PrincipalDecomposition principal(const CovariancePair& pair, MatrixKind kind);

// u^t M u for real directions, u^dag M~ u for complex ones; both agree on
// real input.  Requires |u| = 1.
double variance_along(const CovariancePair& pair, const CVec3& u);

// v^dag M~ u, or v^t M u when both directions are real.
Complex correlation(const CovariancePair& pair, const CVec3& u, const CVec3& v);

// e_par = mean/|mean|; the transversal pair completes the triad starting
// from the Cartesian axis least aligned with e_par.  Throws when |mean| is
// below tol().mean_epsilon: the longitudinal frame is undefined.
LongitudinalFrame longitudinal_frame(const Vec3& mean);

// Checks invariance of the state under U = exp(i pi j_axis).  When the
// symmetry holds, j_axis is necessarily a principal component of M; a
// violation of that implication is reported as internal_error.
ParityCheckResult parity_principal_check(const QuantumState& state,
                                         const OperatorTriple& ops,
                                         const Vec3& axis);

} // namespace spinvar
