#pragma once

#include <complex>

#include <Eigen/Dense>

#include "spinvar/half_integer.hpp"

namespace spinvar {

using Complex = std::complex<double>;
using Vec3  = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using Mat3  = Eigen::Matrix3d;
using CMat3 = Eigen::Matrix3cd;

// Fully antisymmetric tensor with epsilon(0,1,2) = 1 (zero-based indices).
constexpr int levi_civita(int k, int l, int n) {
    if (k == l || l == n || k == n) return 0;
    return ((l - k + 3) % 3 == 1) ? 1 : -1;
}

// Basis of the spin-j space: dimension 2j+1, ordered by m descending so that
// index 0 is m = +j and j_+ is strictly upper triangular.
struct SpinBasis {
    HalfInteger j;
    int dim = 1;

    static SpinBasis of(HalfInteger j);
    int index_of(HalfInteger m) const;      // row index of |j,m>
    HalfInteger m_at(int index) const;      // inverse of index_of

    friend bool operator==(const SpinBasis& a, const SpinBasis& b) {
        return a.j == b.j;
    }
};

// Dense complex matrix acting on the spin-j space.
struct Operator {
    SpinBasis basis;
    Eigen::MatrixXcd mat;
};

double hermiticity_defect(const Operator& op);

// The triple (j1, j2, j3) for one irrep, built once and shared.
struct OperatorTriple {
    SpinBasis basis;
    Operator j1, j2, j3;

    const Operator& component_op(int k) const;  // k in {0,1,2}
};

// Rotation parameters for U = exp(i theta u.j); axis must be unit length.
struct RotationSpec {
    double theta = 0.0;
    Vec3 axis = Vec3(0, 0, 1);

    static RotationSpec about(double theta, const Vec3& axis);
};

// Ladder construction: j3 diagonal with m descending, j1 = (j+ + j-)/2,
// j2 = (j+ - j-)/(2i).
OperatorTriple spin_operators(HalfInteger j);

// Projection j_u = u1 j1 + u2 j2 + u3 j3; Hermitian iff u is real.
Operator component(const OperatorTriple& ops, const CVec3& u);

// U = exp(i theta u.j) via spectral decomposition of the Hermitian generator
// u.j, whose eigenvalues {-j..j} are verified as a consistency check.
Operator su2_unitary(const OperatorTriple& ops, const RotationSpec& spec);

// The 3x3 rotation R defined by U^dag j_k U = sum_l R_{k,l} j_l, recovered as
// R_{k,l} = tr((U^dag j_k U) j_l) / tr(j_l^2).  With this convention
// rotation_from_unitary(U1*U2) = R(U1) * R(U2), and for U = su2_unitary(theta, u)
// the result is the axis-angle rotation about u by angle -theta.
Mat3 rotation_from_unitary(const OperatorTriple& ops, const Operator& U);

} // namespace spinvar
