#pragma once

#include <cstdint>

#include "spinvar/covariance.hpp"

namespace spinvar {

// Constructors for the reference state families, their closed-form
// covariance matrices, and deterministic random states for property suites.
// Every pure state returned here has its first nonzero amplitude real and
// nonnegative.

QuantumState basis_state(HalfInteger j, HalfInteger m);

// |j, theta, u> = U(theta, u) |j, j>.
QuantumState coherent_state(HalfInteger j, const RotationSpec& spec);

// First-order squeezed state
//   N [ |j,0> - (i/2) xi sqrt(j(j+1)) (|j,1> - |j,-1>) ]
// written in the eigenbasis of j0 and j_perp1.  The artifact fixes the
// frame (j_perp1, j_perp2, j_par) = (j1, j2, j3), so the basis above is the
// j1 eigenbasis with ladder phases taken from the cyclic frame (j2, j3, j1).
// Valid only for integer j; intended for xi <= squeezed_approx_xi_max.
QuantumState squeezed_approx(HalfInteger j, double xi);

inline constexpr double squeezed_approx_xi_max = 0.1;

// Exact kernel state of j1 + i xi j2, from the smallest singular vector of
// its (2j+1)-dimensional matrix.  Accepted when sigma_min <= nullspace_accept
// * sigma_max; otherwise (half-integer j away from xi = 1) no exact squeezed
// state exists in the irrep and the call throws.
QuantumState squeezed_exact(HalfInteger j, double xi);

// (|j,j> + |j,-j>)/sqrt(2); requires j > 0.
QuantumState cat_state(HalfInteger j);

// (|j,0> + |j,1>)/sqrt(2); requires integer j >= 1.
QuantumState ramp_state(HalfInteger j);

// Two-mode occupation labels (n1, n2) = (j+m, j-m) of |j,m>.
struct SchwingerLabels {
    int n1 = 0;
    int n2 = 0;
};

SchwingerLabels schwinger_labels(HalfInteger j, HalfInteger m);

struct JM {
    HalfInteger j, m;
};

JM jm_from_labels(const SchwingerLabels& labels);

// Closed-form covariance of |j,m>, used as an oracle against covariance_pair:
//   M  = (1/2) diag(j(j+1)-m^2, j(j+1)-m^2, 0)
//   M~ = M + (i/2) eps_{k,l,3} m  (off-diagonal +- i m / 2)
// with M~ principal variances { [j(j+1)-m(m+1)]/2, [j(j+1)-m(m-1)]/2, 0 }.
struct ReferenceCovariance {
    Mat3 m_real;
    CMat3 m_herm;
    Vec3 mean;
    std::array<double, 3> variances_real;  // descending
    std::array<double, 3> variances_herm;  // descending
};

ReferenceCovariance reference_covariance_jm(HalfInteger j, HalfInteger m);

enum class RandomKind { Pure, Mixed };

// Deterministic per seed: complex-normal amplitudes for pure states, Ginibre
// construction rho = G G^dag / tr for mixed ones.  The sampler is hand-rolled
// Box-Muller over mt19937_64 so the stream is identical on every platform.
QuantumState random_state(HalfInteger j, std::uint64_t seed, RandomKind kind);

} // namespace spinvar
