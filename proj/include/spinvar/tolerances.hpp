#pragma once

namespace spinvar {

// Central record of every floating-point tolerance used by the library.
// All values live here so that large-j runs can be retuned from one place:
// setting the environment variable SPINVAR_TOL to a positive factor scales
// every tolerance below (it does not touch max_twice_j or
// heisenberg_fraction, which are thresholds rather than tolerances).
struct Tolerances {
    double hermiticity        = 1e-10; // matrix Hermiticity / symmetry defect
    double unitarity          = 1e-10; // ||U^dag U - I||_inf
    double algebra            = 1e-10; // commutator and Casimir identities
    double rotation           = 1e-9;  // R^t R = I, det R = 1, frame residuals
    double psd_floor          = 1e-9;  // eigenvalues clamped in [-psd_floor, 0)
    double trace_match        = 1e-9;  // tr M = tr M~ and trace identity
    double relation_slack     = 1e-9;  // uncertainty-relation slack
    double invariance         = 1e-8;  // principal variances under SU(2)
    double generator_spectrum = 1e-8;  // eigenvalues of u.j vs {-j..j}
    double pure_norm          = 1e-8;  // | ||psi||^2 - 1 |
    double density_trace      = 1e-8;  // | tr rho - 1 |
    double mean_epsilon       = 1e-8;  // |<j>| below this => zero-mean regime
    double axis_unit          = 1e-12; // | |u| - 1 | for direction inputs
    double orthogonal_pair    = 1e-10; // |u^dag v| for pair-sum inputs
    double jacobi_sweep       = 1e-14; // off-diagonal target, relative to ||A||
    double nullspace_accept   = 1e-10; // sigma_min <= accept * sigma_max
    double degeneracy_cluster = 1e-9;  // relative eigenvalue clustering

    double heisenberg_fraction = 0.5;  // flag when (dJ1)^2 >= fraction * j^2
    int    max_twice_j         = 200;  // dense-matrix cap on 2j
};

// Process-wide record, SPINVAR_TOL applied once on first use.
const Tolerances& tol();

} // namespace spinvar
