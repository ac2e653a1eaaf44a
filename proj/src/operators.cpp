#include "spinvar/operators.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "spinvar/errors.hpp"
#include "spinvar/tolerances.hpp"

namespace spinvar {

SpinBasis SpinBasis::of(HalfInteger j) {
    if (j.twice() < 0)
        throw input_error("spin j must be nonnegative, got " + j.str());
    if (j.twice() > tol().max_twice_j)
        throw input_error("2j = " + std::to_string(j.twice()) +
                          " exceeds the dense-matrix cap " + std::to_string(tol().max_twice_j));
    return SpinBasis{j, j.twice() + 1};
}

int SpinBasis::index_of(HalfInteger m) const {
    require_valid_jm(j, m);
    return (j.twice() - m.twice()) / 2;
}

HalfInteger SpinBasis::m_at(int index) const {
    return HalfInteger::from_twice(j.twice() - 2 * index);
}

double hermiticity_defect(const Operator& op) {
    return (op.mat - op.mat.adjoint()).cwiseAbs().maxCoeff();
}

const Operator& OperatorTriple::component_op(int k) const {
    switch (k) {
        case 0: return j1;
        case 1: return j2;
        default: return j3;
    }
}

RotationSpec RotationSpec::about(double theta, const Vec3& axis) {
    if (std::abs(axis.norm() - 1.0) > tol().axis_unit)
        throw input_error("rotation axis must be a unit vector");
    return RotationSpec{theta, axis};
}

OperatorTriple spin_operators(HalfInteger j) {
    const SpinBasis basis = SpinBasis::of(j);
    const int dim = basis.dim;
    const double jj = casimir(j);

    Eigen::MatrixXcd jplus = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd j3 = Eigen::MatrixXcd::Zero(dim, dim);
    for (int a = 0; a < dim; ++a) {
        const double m = basis.m_at(a).value();
        j3(a, a) = m;
        if (a > 0) {
            // j+|j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>, one step up = index a-1
            jplus(a - 1, a) = std::sqrt(jj - m * (m + 1.0));
        }
    }
    const Eigen::MatrixXcd jminus = jplus.adjoint();

    OperatorTriple ops;
    ops.basis = basis;
    ops.j1 = Operator{basis, 0.5 * (jplus + jminus)};
    ops.j2 = Operator{basis, Complex(0, -0.5) * (jplus - jminus)};
    ops.j3 = Operator{basis, j3};
    return ops;
}

Operator component(const OperatorTriple& ops, const CVec3& u) {
    if (u.norm() == 0.0)
        throw input_error("degenerate direction: zero vector has no component");
    Eigen::MatrixXcd mat = u(0) * ops.j1.mat + u(1) * ops.j2.mat + u(2) * ops.j3.mat;
    return Operator{ops.basis, std::move(mat)};
}

Operator su2_unitary(const OperatorTriple& ops, const RotationSpec& spec) {
    if (std::abs(spec.axis.norm() - 1.0) > tol().axis_unit)
        throw input_error("rotation axis must be a unit vector");

    const Operator generator = component(ops, spec.axis.cast<Complex>());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(generator.mat);
    if (es.info() != Eigen::Success)
        throw internal_error("eigendecomposition of u.j failed");

    // The generator spectrum is exactly {-j, ..., +j}; a mismatch means the
    // operator algebra is broken upstream.
    const double jval = ops.basis.j.value();
    for (int k = 0; k < ops.basis.dim; ++k) {
        const double expected = -jval + k;
        if (std::abs(es.eigenvalues()(k) - expected) > tol().generator_spectrum)
            throw internal_error("u.j spectrum deviates from {-j..j}");
    }

    Eigen::VectorXcd phases(ops.basis.dim);
    for (int k = 0; k < ops.basis.dim; ++k)
        phases(k) = std::exp(Complex(0, spec.theta * es.eigenvalues()(k)));
    Eigen::MatrixXcd u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    return Operator{ops.basis, std::move(u)};
}

Mat3 rotation_from_unitary(const OperatorTriple& ops, const Operator& U) {
    if (!(U.basis == ops.basis))
        throw input_error("basis mismatch between unitary and operator triple");
    if (ops.basis.j.twice() == 0)
        throw input_error("trivial representation: traces vanish for j = 0");

    const double unitarity =
        (U.mat.adjoint() * U.mat - Eigen::MatrixXcd::Identity(U.mat.rows(), U.mat.cols()))
            .cwiseAbs()
            .maxCoeff();
    if (unitarity > tol().unitarity)
        throw input_error("operator is not unitary");

    // tr(j_l^2) = j(j+1)(2j+1)/3 for every component.
    const double jval = ops.basis.j.value();
    const double trace_jsq = casimir(ops.basis.j) * (2.0 * jval + 1.0) / 3.0;

    Mat3 r;
    for (int k = 0; k < 3; ++k) {
        const Eigen::MatrixXcd conjugated =
            U.mat.adjoint() * ops.component_op(k).mat * U.mat;
        for (int l = 0; l < 3; ++l) {
            const Complex overlap = (conjugated * ops.component_op(l).mat).trace();
            if (std::abs(overlap.imag()) > tol().rotation * (1.0 + trace_jsq))
                throw internal_error("rotation projection has an imaginary part");
            r(k, l) = overlap.real() / trace_jsq;
        }
    }

    if ((r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff() > tol().rotation)
        throw internal_error("recovered R is not orthogonal");
    if (std::abs(r.determinant() - 1.0) > tol().rotation)
        throw internal_error("recovered R is not proper");
    return r;
}

} // namespace spinvar
