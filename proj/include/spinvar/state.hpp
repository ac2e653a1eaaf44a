#pragma once

#include "spinvar/operators.hpp"

namespace spinvar {

// Pure amplitude vector or Hermitian unit-trace density matrix on the
// spin-j space.  Construction validates the invariants (norm, Hermiticity,
// trace, positivity) and throws state_error on violation.
class QuantumState {
public:
    enum class Form { Pure, Density };

    static QuantumState pure(SpinBasis basis, Eigen::VectorXcd amplitudes);
    static QuantumState density(SpinBasis basis, Eigen::MatrixXcd rho);

    const SpinBasis& basis() const { return basis_; }
    Form form() const { return form_; }
    bool is_pure() const { return form_ == Form::Pure; }
    int dim() const { return basis_.dim; }

    const Eigen::VectorXcd& amplitudes() const;   // Pure only
    const Eigen::MatrixXcd& density_matrix() const; // Density only
    Eigen::MatrixXcd as_density() const;          // rho for either form

private:
    QuantumState(SpinBasis basis, Form form) : basis_(basis), form_(form) {}
    SpinBasis basis_;
    Form form_;
    Eigen::VectorXcd amps_;
    Eigen::MatrixXcd rho_;
};

// <psi|op|psi> or tr(rho op).
Complex expectation(const QuantumState& state, const Operator& op);

// <op1 op2> second moment, using |op1 psi>^dag |op2 psi> for pure states.
Complex expectation_product(const QuantumState& state, const Operator& op1,
                            const Operator& op2);

// (<j1>, <j2>, <j3>); imaginary parts are checked against tolerance and
// discarded.
Vec3 mean_vector(const QuantumState& state, const OperatorTriple& ops);

// U|psi> or U rho U^dag.
QuantumState apply_unitary(const QuantumState& state, const Operator& U);

// Multiplies a pure state by a phase so its first nonzero amplitude is real
// and nonnegative; identity on density matrices.
QuantumState fix_global_phase(const QuantumState& state);

} // namespace spinvar
