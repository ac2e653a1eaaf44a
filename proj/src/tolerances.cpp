#include "spinvar/tolerances.hpp"

#include <cstdlib>
#include <string>

namespace spinvar {

namespace {

Tolerances make_tolerances() {
    Tolerances t;
    if (const char* env = std::getenv("SPINVAR_TOL")) {
        double factor = 1.0;
        try {
            factor = std::stod(env);
        } catch (...) {
            factor = 1.0;
        }
        if (factor > 0.0) {
            t.hermiticity *= factor;
            t.unitarity *= factor;
            t.algebra *= factor;
            t.rotation *= factor;
            t.psd_floor *= factor;
            t.trace_match *= factor;
            t.relation_slack *= factor;
            t.invariance *= factor;
            t.generator_spectrum *= factor;
            t.pure_norm *= factor;
            t.density_trace *= factor;
            t.mean_epsilon *= factor;
            t.axis_unit *= factor;
            t.orthogonal_pair *= factor;
            t.jacobi_sweep *= factor;
            t.nullspace_accept *= factor;
            t.degeneracy_cluster *= factor;
        }
    }
    return t;
}

} // namespace

const Tolerances& tol() {
    static const Tolerances t = make_tolerances();
    return t;
}

} // namespace spinvar
