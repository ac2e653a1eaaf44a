#include "spinvar/jacobi3.hpp"

#include <cmath>

#include "spinvar/errors.hpp"
#include "spinvar/tolerances.hpp"

namespace spinvar {

namespace {

constexpr int kMaxSweeps = 64;
constexpr int kPivots[3][2] = {{0, 1}, {0, 2}, {1, 2}};

double off_norm(const Mat3& a) {
    double s = 0.0;
    for (const auto& pv : kPivots) s += a(pv[0], pv[1]) * a(pv[0], pv[1]);
    return std::sqrt(2.0 * s);
}

double off_norm(const CMat3& a) {
    double s = 0.0;
    for (const auto& pv : kPivots) s += std::norm(a(pv[0], pv[1]));
    return std::sqrt(2.0 * s);
}

// tan(theta) from tau = (a_qq - a_pp) / (2 |a_pq|), the root of smaller
// magnitude of t^2 + 2 tau t - 1 = 0.
double jacobi_tangent(double tau) {
    const double sign = tau >= 0.0 ? 1.0 : -1.0;
    return sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
}

} // namespace

JacobiReal jacobi_eigen_sym(const Mat3& input) {
    Mat3 a = input;
    Mat3 v = Mat3::Identity();
    const double target = tol().jacobi_sweep * input.norm();

    for (int sweep = 0; sweep < kMaxSweeps && off_norm(a) > target; ++sweep) {
        for (const auto& pv : kPivots) {
            const int p = pv[0], q = pv[1];
            if (a(p, q) == 0.0) continue;

            const double tau = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
            const double t = jacobi_tangent(tau);
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;

            Mat3 rot = Mat3::Identity();
            rot(p, p) = c;
            rot(q, q) = c;
            rot(p, q) = s;
            rot(q, p) = -s;
            a = rot.transpose() * a * rot;
            a(p, q) = a(q, p) = 0.0;
            v = v * rot;
        }
    }
    if (off_norm(a) > target)
        throw internal_error("real Jacobi sweep did not converge");

    return JacobiReal{{a(0, 0), a(1, 1), a(2, 2)}, v};
}

JacobiHermitian jacobi_eigen_herm(const CMat3& input) {
    CMat3 a = input;
    CMat3 v = CMat3::Identity();
    const double target = tol().jacobi_sweep * input.norm();

    for (int sweep = 0; sweep < kMaxSweeps && off_norm(a) > target; ++sweep) {
        for (const auto& pv : kPivots) {
            const int p = pv[0], q = pv[1];
            const double mag = std::abs(a(p, q));
            if (mag == 0.0) continue;

            // Unitary plane rotation with phase of the pivot entry.
            const Complex phase = a(p, q) / mag;
            const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
            const double t = jacobi_tangent(tau);
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;

            CMat3 rot = CMat3::Identity();
            rot(p, p) = c;
            rot(q, q) = c;
            rot(p, q) = s * phase;
            rot(q, p) = -s * std::conj(phase);
            a = rot.adjoint() * a * rot;
            a(p, q) = a(q, p) = Complex(0, 0);
            a(p, p) = Complex(a(p, p).real(), 0);
            a(q, q) = Complex(a(q, q).real(), 0);
            v = v * rot;
        }
    }
    if (off_norm(a) > target)
        throw internal_error("Hermitian Jacobi sweep did not converge");

    return JacobiHermitian{{a(0, 0).real(), a(1, 1).real(), a(2, 2).real()}, v};
}

} // namespace spinvar
