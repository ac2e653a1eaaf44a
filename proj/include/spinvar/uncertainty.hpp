#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinvar/covariance.hpp"

namespace spinvar {

// One evaluated bound lhs >= rhs.  `applicable` is false when the relation
// is not a theorem in the state's regime (e.g. transversal relations with
// <j> = 0); values are still reported when they are computable, and are
// zero-filled when the quantities themselves are undefined.
struct RelationResult {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;       // lhs - rhs
    bool satisfied = true;    // slack >= -relation_slack
    bool equality = false;    // |slack| <= relation_slack
    bool applicable = true;
};

RelationResult make_relation(std::string name, double lhs, double rhs, bool applicable);

// tr M = <j0(j0+1)> - <J>^2 >= <j0>; equality exactly for SU(2) coherent states.
RelationResult trace_bound(const CovariancePair& pair);

// Dj_perp1 Dj_perp2 >= (1/2)|<j_par>| in the longitudinal frame, plus the
// sharper principal form DJ_perp1 DJ_perp2 when j_par is a principal
// component (parity symmetry); the chain between the two forms is asserted.
std::vector<RelationResult> transversal_product(const QuantumState& state,
                                                const OperatorTriple& ops,
                                                const CovariancePair& pair);

// (Dj_perp1)^2 + (Dj_perp2)^2 >= <j0>.
RelationResult transversal_sum(const QuantumState& state,
                               const OperatorTriple& ops,
                               const CovariancePair& pair);

// The six ordered bounds on the principal variances of M for <j> = 0
//   <j0^2> >= (DJ1)^2 >= <j0(j0+1)>/3
//   <j0(j0+1)>/2 >= (DJ2)^2 >= <j0>/2
//   <j0(j0+1)>/3 >= (DJ3)^2 >= 0
// evaluated with the fixed-irrep values <j0^2> = j^2 etc., and repeated for
// the principal variances of M~.
std::vector<RelationResult> zero_mean_bounds(const CovariancePair& pair);

// (DJ1)^2 (DJ2)^2 >= min[ <j0><j0^2>/2, <j0(j0+1)>^2/9 ] for <j> = 0;
// both alternatives are computed and the minimum taken, which reduces to
// <j0><j0^2>/2 for j >= 2.
RelationResult zero_mean_product(const CovariancePair& pair);

struct PairSumResult {
    RelationResult relation;       // (Dj_u)^2 + (Dj_v)^2 >= <j0>
    double three_way_sum = 0.0;    // adds (Dj_w)^2 with w completing the triple
};

// u, v must be orthonormal complex directions; the completed three-way sum
// equals <j0(j0+1)> for zero-mean states and is returned for inspection.
PairSumResult pair_sum_bound(const CovariancePair& pair, const CVec3& u, const CVec3& v);

// Textbook Dj_k Dj_l >= |<j_n>|/2 on raw components; kept to demonstrate its
// SU(2) non-invariance next to the principal-variance relations.  k, l are
// zero-based and distinct.
RelationResult standard_product(const CovariancePair& pair, int k, int l);

// Phase-shift resolution bound 1/(2 DJ1) from the largest principal variance
// of M.  Throws when DJ1 = 0 (only the trivial irrep).
double phase_resolution(const CovariancePair& pair);

// DJ1^2 >= heisenberg_fraction * j^2, the Heisenberg-scaling flag.
bool heisenberg_scaling(const CovariancePair& pair);

// Everything the analysis produces for one state.
struct UncertaintyReport {
    std::string descriptor;
    CovariancePair pair;
    PrincipalDecomposition principal_real;
    PrincipalDecomposition principal_herm;
    std::vector<RelationResult> relations;
    std::optional<double> phase_res;   // empty only for j = 0
    bool heisenberg = false;
    bool mean_zero_regime = false;
};

UncertaintyReport build_report(const QuantumState& state, const OperatorTriple& ops,
                               std::string descriptor);

} // namespace spinvar
