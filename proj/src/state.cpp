#include "spinvar/state.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "spinvar/errors.hpp"
#include "spinvar/tolerances.hpp"

namespace spinvar {

QuantumState QuantumState::pure(SpinBasis basis, Eigen::VectorXcd amplitudes) {
    if (amplitudes.size() != basis.dim)
        throw state_error("amplitude vector has wrong dimension");
    const double norm2 = amplitudes.squaredNorm();
    if (std::abs(norm2 - 1.0) > tol().pure_norm)
        throw state_error("pure state is not normalized: ||psi||^2 = " + std::to_string(norm2));

    QuantumState s(basis, Form::Pure);
    s.amps_ = std::move(amplitudes);
    return s;
}

QuantumState QuantumState::density(SpinBasis basis, Eigen::MatrixXcd rho) {
    if (rho.rows() != basis.dim || rho.cols() != basis.dim)
        throw state_error("density matrix has wrong dimension");
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol().hermiticity * (1.0 + rho.cwiseAbs().maxCoeff()))
        throw state_error("density matrix is not Hermitian");
    const Complex trace = rho.trace();
    if (std::abs(trace - Complex(1.0, 0.0)) > tol().density_trace)
        throw state_error("density matrix trace differs from 1");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw state_error("density matrix eigendecomposition failed");
    if (es.eigenvalues().minCoeff() < -tol().psd_floor)
        throw state_error("density matrix has a negative eigenvalue");

    QuantumState s(basis, Form::Density);
    s.rho_ = std::move(rho);
    return s;
}

const Eigen::VectorXcd& QuantumState::amplitudes() const {
    if (form_ != Form::Pure)
        throw state_error("state is not pure");
    return amps_;
}

const Eigen::MatrixXcd& QuantumState::density_matrix() const {
    if (form_ != Form::Density)
        throw state_error("state is not a density matrix");
    return rho_;
}

Eigen::MatrixXcd QuantumState::as_density() const {
    if (form_ == Form::Pure)
        return amps_ * amps_.adjoint();
    return rho_;
}

namespace {

void require_same_basis(const QuantumState& state, const Operator& op) {
    if (!(state.basis() == op.basis))
        throw input_error("basis mismatch between state and operator");
}

} // namespace

Complex expectation(const QuantumState& state, const Operator& op) {
    require_same_basis(state, op);
    if (state.is_pure())
        return state.amplitudes().dot(op.mat * state.amplitudes());
    return (state.density_matrix() * op.mat).trace();
}

Complex expectation_product(const QuantumState& state, const Operator& op1,
                            const Operator& op2) {
    require_same_basis(state, op1);
    require_same_basis(state, op2);
    if (state.is_pure()) {
        // <psi|A B|psi> = (A^dag psi)^dag (B psi); A is Hermitian here.
        const Eigen::VectorXcd left = op1.mat.adjoint() * state.amplitudes();
        const Eigen::VectorXcd right = op2.mat * state.amplitudes();
        return left.dot(right);
    }
    return (state.density_matrix() * op1.mat * op2.mat).trace();
}

Vec3 mean_vector(const QuantumState& state, const OperatorTriple& ops) {
    Vec3 mean;
    for (int k = 0; k < 3; ++k) {
        const Complex value = expectation(state, ops.component_op(k));
        if (std::abs(value.imag()) > tol().hermiticity * (1.0 + std::abs(value.real())))
            throw internal_error("mean of a Hermitian component has an imaginary part");
        mean(k) = value.real();
    }
    return mean;
}

QuantumState apply_unitary(const QuantumState& state, const Operator& U) {
    require_same_basis(state, U);
    if (state.is_pure())
        return QuantumState::pure(state.basis(), U.mat * state.amplitudes());
    return QuantumState::density(state.basis(), U.mat * state.density_matrix() * U.mat.adjoint());
}

QuantumState fix_global_phase(const QuantumState& state) {
    if (!state.is_pure())
        return state;
    Eigen::VectorXcd amps = state.amplitudes();
    for (int i = 0; i < amps.size(); ++i) {
        const double mag = std::abs(amps(i));
        if (mag > 1e-14) {
            amps *= std::conj(amps(i)) / mag;
            break;
        }
    }
    return QuantumState::pure(state.basis(), std::move(amps));
}

} // namespace spinvar
